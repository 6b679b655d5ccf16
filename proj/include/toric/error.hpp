#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class Errc {
    not_prime_power,
    field_too_small,
    division_by_zero,
    field_mismatch,
    invalid_argument,
    clutter_axiom_violation,
    not_a_graph,
    not_connected,
    not_connected_bipartite,
    no_free_vertex,
    zero_coordinate,
    budget_exceeded,
    size_limit,
    invalid_degree,
    parse_error,
    inconsistent_theorems,
};

std::string_view errc_name(Errc code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace toric

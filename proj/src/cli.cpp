#include "toric/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "toric/theory.hpp"

namespace toric::cli {

namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& msg) {
    throw Error(Errc::parse_error, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

struct Token {
    std::string text;
    std::size_t col;
};

std::vector<Token> split_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#') break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

long long to_int(const Token& t, std::size_t line) {
    long long v = 0;
    std::size_t used = 0;
    try {
        v = std::stoll(t.text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != t.text.size() || used == 0) parse_fail(line, t.col, "expected an integer, got '" + t.text + "'");
    return v;
}

void check_q(long long q) {
    if (q < 3) throw Error(Errc::field_too_small, "q = " + std::to_string(q) + " is too small (q >= 3 required)");
    if (q > 65536) throw Error(Errc::invalid_argument, "q = " + std::to_string(q) + " is too large");
    (void)Field(std::uint32_t(q));
}

ParsedInput parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::pair<std::size_t, std::vector<Token>>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_line(line);
        if (!toks.empty()) rows.emplace_back(lineno, std::move(toks));
    }
    if (rows.empty()) parse_fail(1, 1, "empty input");
    const auto& [hl, head] = rows.front();
    if (head.size() != 3) parse_fail(hl, head.front().col, "header must be 'n s q'");
    const long long n = to_int(head[0], hl), s = to_int(head[1], hl), q = to_int(head[2], hl);
    if (n < 1 || n > 4096) parse_fail(hl, head[0].col, "vertex count out of range");
    if (s < 1) parse_fail(hl, head[1].col, "edge count must be positive");
    if (std::size_t(s) != rows.size() - 1)
        parse_fail(rows.back().first, 1,
                   "expected " + std::to_string(s) + " edge lines, found " + std::to_string(rows.size() - 1));
    std::vector<std::vector<int>> edges;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& [ln, toks] = rows[r];
        std::vector<int> e;
        for (const auto& t : toks) {
            long long v = to_int(t, ln);
            if (v < 1 || v > n) parse_fail(ln, t.col, "vertex " + t.text + " outside 1.." + std::to_string(n));
            if (std::find(e.begin(), e.end(), int(v)) != e.end()) parse_fail(ln, t.col, "repeated vertex " + t.text);
            e.push_back(int(v));
        }
        edges.push_back(std::move(e));
    }
    check_q(q);
    return {Clutter::from_one_based(int(n), edges), std::uint32_t(q)};
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

ParsedInput parse_json_input(std::string_view text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [l, c] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        parse_fail(l, c, "malformed JSON");
    }
    auto need_int = [&](const char* key) -> long long {
        if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
            parse_fail(1, 1, std::string("missing integer field \"") + key + "\"");
        return j[key].get<long long>();
    };
    const long long q = need_int("q");
    const long long n = need_int("n");
    if (n < 1 || n > 4096) parse_fail(1, 1, "vertex count out of range");
    if (!j.contains("edges") || !j["edges"].is_array() || j["edges"].empty())
        parse_fail(1, 1, "\"edges\" must be a nonempty array");
    std::vector<std::vector<int>> edges;
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
        const auto& e = j["edges"][i];
        if (!e.is_array()) parse_fail(1, 1, "edge " + std::to_string(i + 1) + " is not an array");
        std::vector<int> out;
        for (const auto& v : e) {
            if (!v.is_number_integer()) parse_fail(1, 1, "edge " + std::to_string(i + 1) + " has a non-integer entry");
            long long x = v.get<long long>();
            if (x < 1 || x > n)
                parse_fail(1, 1, "edge " + std::to_string(i + 1) + ": vertex " + std::to_string(x) + " out of range");
            if (std::find(out.begin(), out.end(), int(x)) != out.end())
                parse_fail(1, 1, "edge " + std::to_string(i + 1) + ": repeated vertex " + std::to_string(x));
            out.push_back(int(x));
        }
        edges.push_back(std::move(out));
    }
    check_q(q);
    return {Clutter::from_one_based(int(n), edges), std::uint32_t(q)};
}

std::vector<int> one_based(const std::vector<int>& v) {
    std::vector<int> out(v);
    for (int& x : out) ++x;
    return out;
}

ojson facts_json(const Clutter& c) {
    ojson j = ojson::object();
    const auto facts = graph_facts(c);
    j["graph"] = facts.is_graph;
    if (facts.is_graph) {
        j["connected"] = *facts.connected;
        j["components"] = *facts.components;
        j["bipartite"] = facts.bipartite();
        if (facts.bipartition) {
            j["V1"] = one_based(facts.bipartition->first);
            j["V2"] = one_based(facts.bipartition->second);
        }
        j["tree"] = *facts.tree;
        j["unicyclic"] = *facts.unicyclic;
        if (facts.cycle_length) j["cycle_length"] = *facts.cycle_length;
        j["hamiltonian"] = *facts.hamiltonian;
        if (facts.largest_cycle) j["largest_cycle"] = *facts.largest_cycle;
    }
    j["free_vertices"] = one_based(facts.free_vertices);
    if (auto k = is_k_uniform(c)) j["uniform"] = *k;
    if (auto t = find_unit_transversal(c))
        j["unit_transversal"] = one_based(*t);
    else
        j["unit_transversal"] = nullptr;
    return j;
}

ojson profile_json(const HilbertProfile& p) {
    return ojson{{"H", p.H}, {"h", p.h}, {"degree", p.degree}, {"regularity", p.regularity}};
}

class Runner {
public:
    Runner(const JobSpec& job, const Clutter& c, std::uint32_t q) : job_(job), c_(c), f_(q) {
        r_.command = job.command;
        r_.q = q;
        r_.n = c.num_vertices();
        r_.edges = c.one_based_edges();
    }

    Report finish() { return std::move(r_); }

    template <class Fn>
    auto timed(const std::string& name, Fn fn) {
        auto t0 = std::chrono::steady_clock::now();
        auto out = fn();
        if (job_.timings) {
            double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            r_.timings[name] = r_.timings.value(name, 0.0) + dt;
        }
        return out;
    }

    void add(const Prediction& p, std::optional<std::uint64_t> computed) {
        Verdict v{p.quantity, p.theorem, p.lo, p.hi, computed, ""};
        if (!p.hypotheses)
            v.verdict = "inapplicable";
        else if (!computed)
            v.verdict = "unchecked";
        else
            v.verdict = p.contains(*computed) ? "match" : "mismatch";
        r_.verdicts.push_back(std::move(v));
    }

    void add_flag(const std::string& quantity, const std::string& theorem, bool holds) {
        add(exact_prediction(quantity, 1, theorem), holds ? 1 : 0);
    }

    const PointSet& X() {
        if (!x_) x_ = timed("points", [&] { return projective_toric_set(c_, f_, job_.budget); });
        return *x_;
    }
    const PointSet& Y() {
        if (!y_) y_ = timed("points", [&] { return projective_closure_points(c_, f_, job_.budget); });
        return *y_;
    }
    const PointSet& Xstar() {
        if (!xs_) xs_ = timed("points", [&] { return affine_toric_set(c_, f_, job_.budget); });
        return *xs_;
    }
    const HilbertProfile& PX() {
        if (!px_) px_ = timed("hilbert", [&] { return hilbert_profile(X()); });
        return *px_;
    }
    const HilbertProfile& PY() {
        if (!py_) py_ = timed("hilbert", [&] { return hilbert_profile(Y()); });
        return *py_;
    }

    void facts() { r_.facts = facts_json(c_); }

    void cardinalities() {
        const std::uint64_t nx = X().size(), ny = Y().size();
        r_.invariants["|X|"] = nx;
        r_.invariants["|Y|"] = ny;
        for (const auto& p : predict_cardinalities(c_, f_.order())) {
            std::uint64_t v = p.quantity == "|X|" ? nx : p.quantity == "|Y|" ? ny : ny / nx;
            add(p, v);
        }
    }

    void regularity() {
        const auto& p = PX();
        r_.invariants["X"] = profile_json(p);
        const auto preds = regularity_predictions(c_, f_.order());
        for (const auto& pr : preds) add(pr, pr.quantity == "deg(X)" ? p.degree : std::uint64_t(p.regularity));
        std::vector<Prediction> usable;
        for (const auto& pr : preds)
            if (pr.hypotheses) usable.push_back(pr);
        if (auto comb = combine(usable, "reg(X)")) r_.invariants["reg(X) predicted"] = ojson::array({comb->lo, comb->hi});
    }

    void closure_series() {
        const auto& px = PX();
        const auto& py = PY();
        r_.invariants["Y"] = profile_json(py);
        const std::uint32_t q = f_.order();
        if (Y().size() == std::uint64_t(q - 1) * X().size()) {
            add(exact_prediction("reg(Y)", px.regularity + (q - 2), "y-series-factorization"), py.regularity);
            add_flag("F_Y = F_X (1 + ... + t^(q-2))", "y-series-factorization", series_factorization_check(px, py, q));
        } else {
            add(refused_prediction("reg(Y)", "y-series-factorization"), py.regularity);
        }
    }

    void affine_hilbert() {
        const auto& py = PY();
        const auto& xs = Xstar();
        std::vector<std::uint64_t> H;
        bool equal = true;
        timed("hilbert", [&] {
            for (std::uint32_t d = 0; d <= py.regularity; ++d) {
                H.push_back(hilbert_function(xs, d));
                equal = equal && H.back() == py.at(d);
            }
            return 0;
        });
        r_.invariants["X*"] = ojson{{"H", H}, {"size", xs.size()}};
        add_flag("H_Y = H_X*", "closure-affine-hilbert", equal);
    }

    void ci() {
        const auto rep = timed("ci", [&] { return ci_report(c_, f_, job_.budget); });
        r_.invariants["ci(X)"] = rep.ci_x;
        r_.invariants["ci(Y)"] = rep.ci_y;
        if (rep.predicted_ci_x)
            add(exact_prediction("ci(X)", *rep.predicted_ci_x, rep.theorem_x), rep.ci_x);
        else
            add(refused_prediction("ci(X)", "connected-graph-ci-x"), rep.ci_x);
        if (rep.predicted_ci_y)
            add(exact_prediction("ci(Y)", *rep.predicted_ci_y, rep.theorem_y), rep.ci_y);
        else
            add(refused_prediction("ci(Y)", "connected-graph-ci-y"), rep.ci_y);
        add_flag("ci(Y) => ci(X)", "ci-y-implies-ci-x", rep.implication_holds);
    }

    void free_vertex() {
        const auto facts = graph_facts(c_);
        if (facts.free_vertices.empty() || c_.num_edges() < 2) return;
        const auto chk = timed("hilbert", [&] { return free_vertex_reduction_check(c_, f_); });
        const std::uint32_t q2 = f_.order() - 2;
        add(exact_prediction("reg(X)", chk.reg_reduced + q2, "free-vertex-reduction"), chk.reg_x);
        add(exact_prediction("deg(X)", chk.deg_reduced * (f_.order() - 1), "free-vertex-reduction"), chk.deg_x);
    }

    // Distance predictions for delta_X(d) that need no search.
    std::vector<Prediction> distance_predictions(const EvalCode& code, std::uint32_t d) {
        std::vector<Prediction> out;
        const std::string qd = "delta_X(" + std::to_string(d) + ")";
        out.push_back(interval_prediction(qd, 1, code.length - code.dimension + 1, "singleton"));
        if (d >= 1) {
            const auto facts = graph_facts(c_);
            if (facts.connected_bipartite()) out.push_back(distance_bounds_bipartite(c_, f_.order(), d));
            if (is_projective_torus(X()))
                out.push_back(exact_prediction(qd, torus_distance(std::uint32_t(c_.num_edges()), f_.order(), d),
                                               "torus-distance"));
        }
        return out;
    }

    struct Computed {
        EvalCode code;
        DistanceResult result;
    };

    Computed code_x(std::uint32_t d) {
        auto code = timed("codes", [&] { return projective_code(X(), d); });
        auto res = timed("distance", [&] { return minimum_distance(code, job_.budget); });
        r_.codes.push_back({"X", d, code_parameters(code, res), res.method});
        for (const auto& p : distance_predictions(code, d)) {
            if (res.exact) {
                add(p, res.distance);
            } else {
                Verdict v{p.quantity, p.theorem, p.lo, p.hi, std::nullopt, "unchecked"};
                if (res.upper < p.lo || res.lower > p.hi) v.verdict = "mismatch";
                r_.verdicts.push_back(std::move(v));
            }
        }
        return {std::move(code), std::move(res)};
    }

    void codes_only() {
        for (std::uint32_t d = job_.degree_lo; d <= job_.degree_hi; ++d) code_x(d);
    }

    void verify_codes() {
        std::mt19937_64 rng(job_.seed);
        const std::uint32_t q = f_.order();
        const bool unit = find_unit_transversal(c_).has_value();
        const auto facts = graph_facts(c_);
        for (std::uint32_t d = job_.degree_lo; d <= job_.degree_hi; ++d) {
            auto cx = code_x(d);
            const auto cy = timed("codes", [&] { return closure_code(Y(), d); });
            const auto ry = timed("distance", [&] { return minimum_distance(cy, job_.budget); });
            r_.codes.push_back({"Y", d, code_parameters(cy, ry), ry.method});
            const auto ca = timed("codes", [&] { return affine_code(Xstar(), d); });
            const auto ra = timed("distance", [&] { return minimum_distance(ca, job_.budget); });
            r_.codes.push_back({"X*", d, code_parameters(ca, ra), ra.method});

            const std::string tag = "(" + std::to_string(d) + ")";
            if (ra.exact && ry.exact) {
                add(exact_prediction("length C_Y" + tag, ca.length, "closure-affine-bridge"), cy.length);
                add(exact_prediction("dim C_Y" + tag, ca.dimension, "closure-affine-bridge"), cy.dimension);
                add(exact_prediction("delta_Y" + tag, ra.distance, "closure-affine-bridge"), ry.distance);
                add(exact_prediction("dim C_Y" + tag, hilbert_function(Y(), d), "dimension-is-hilbert"),
                    cy.dimension);
            }
            add(exact_prediction("dim C_X" + tag, hilbert_function(X(), d), "dimension-is-hilbert"),
                cx.code.dimension);
            if (cx.result.exact && ry.exact) {
                const std::uint64_t bound = std::uint64_t(q - 1) * cx.result.distance;
                if (unit)
                    add(interval_prediction("delta_Y" + tag, 0, bound, "unit-transversal-delta-y"), ry.distance);
                else
                    add(refused_prediction("delta_Y" + tag, "unit-transversal-delta-y"), ry.distance);
                if (d == 1 && facts.connected_bipartite() && c_.num_vertices() >= 3)
                    add(exact_prediction("delta_Y" + tag, bound, "bipartite-delta-y"), ry.distance);
                else if (d == 1)
                    add(refused_prediction("delta_Y" + tag, "bipartite-delta-y"), ry.distance);
            }
            if (cx.result.exact) {
                Matrix g = cx.code.generator;
                std::uniform_int_distribution<std::uint32_t> pick(1, q - 1);
                for (std::size_t col = 0; col < g.cols; ++col) {
                    Elem s = f_.exp(pick(rng));
                    for (std::size_t row = 0; row < g.rows; ++row) g.at(row, col) = f_.mul(g.at(row, col), s);
                }
                DistanceOptions opts;
                opts.budget = job_.budget;
                opts.transitive = false;
                const auto rs = timed("distance", [&] { return minimum_distance(f_, g, opts); });
                if (rs.exact)
                    add(exact_prediction("delta_X" + tag + " rescaled", cx.result.distance, "column-scaling-invariance"),
                        rs.distance);
            }
        }
    }

    void eisenbud_goto() {
        const auto facts = graph_facts(c_);
        if (!facts.is_graph || !facts.connected_bipartite() || !facts.hamiltonian.value_or(false)) return;
        add_flag("reg(X) <= deg(X) - (s-1)", "eisenbud-goto-check",
                 eisenbud_goto_check(PX(), std::uint32_t(c_.num_edges())));
        const std::uint64_t k = std::uint64_t(c_.num_vertices()) / 2;
        add_flag("(q-1)^(2k-2) >= (k-1)(q+k-1)", "eisenbud-goto-lemma", eisenbud_goto_lemma(k, f_.order()));
    }

    void predict() {
        const std::uint64_t before = points_enumerated();
        r_.facts = facts_json(c_);
        const std::uint32_t q = f_.order();
        for (const auto& p : predict_cardinalities(c_, q)) add(p, std::nullopt);
        for (const auto& p : regularity_predictions(c_, q)) add(p, std::nullopt);
        for (const auto& p : predict_ci(c_, q)) add(p, std::nullopt);
        const auto facts = graph_facts(c_);
        for (std::uint32_t d = std::max<std::uint32_t>(job_.degree_lo, 1); d <= job_.degree_hi; ++d)
            if (facts.connected_bipartite()) add(distance_bounds_bipartite(c_, q, d), std::nullopt);
        for (const char* quantity : {"reg(X)", "deg(X)", "|X|", "|Y|"}) {
            std::vector<Prediction> all;
            for (const auto& v : r_.verdicts)
                if (v.quantity == quantity && v.verdict != "inapplicable")
                    all.push_back(interval_prediction(v.quantity, v.lo, v.hi, v.theorem));
            if (auto comb = combine(all, quantity))
                r_.invariants[quantity] = ojson{{"lo", comb->lo}, {"hi", comb->hi}, {"theorems", comb->theorem}};
        }
        r_.invariants["points_enumerated"] = points_enumerated() - before;
    }

    void note(std::string s) { r_.notes.push_back(std::move(s)); }

private:
    const JobSpec& job_;
    const Clutter& c_;
    Field f_;
    Report r_;
    std::optional<PointSet> x_, y_, xs_;
    std::optional<HilbertProfile> px_, py_;
};

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p);
    if (!out) throw Error(Errc::invalid_argument, "cannot write " + p.string());
    out << text;
}

}  // namespace

ParsedInput parse_input(std::string_view text) {
    auto first = std::find_if(text.begin(), text.end(), [](char ch) { return !std::isspace(static_cast<unsigned char>(ch)); });
    if (first != text.end() && *first == '{') return parse_json_input(text);
    return parse_edge_list(text);
}

std::pair<std::uint32_t, std::uint32_t> parse_degree_range(std::string_view s) {
    auto num = [&](std::string_view t) -> std::uint32_t {
        if (t.empty() || t.size() > 6 || !std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw Error(Errc::parse_error, "bad degree range '" + std::string(s) + "'");
        return std::uint32_t(std::stoul(std::string(t)));
    };
    const auto dots = s.find("..");
    std::uint32_t a, b;
    if (dots == std::string_view::npos) {
        a = b = num(s);
    } else {
        a = num(s.substr(0, dots));
        b = num(s.substr(dots + 2));
    }
    if (a > b) throw Error(Errc::invalid_degree, "empty degree range '" + std::string(s) + "'");
    return {a, b};
}

Report run(const JobSpec& job, const Clutter& c, std::uint32_t q) {
    try {
        Runner r(job, c, q);
        const std::string& cmd = job.command;
        if (cmd == "predict") {
            r.predict();
            return r.finish();
        }
        r.facts();
        if (cmd == "analyze") {
            r.cardinalities();
            r.regularity();
            r.closure_series();
            r.ci();
        } else if (cmd == "hilbert") {
            r.cardinalities();
            r.regularity();
            r.closure_series();
            r.affine_hilbert();
        } else if (cmd == "code") {
            r.codes_only();
        } else if (cmd == "ci") {
            r.ci();
        } else if (cmd == "verify") {
            r.cardinalities();
            r.regularity();
            r.closure_series();
            r.affine_hilbert();
            r.ci();
            r.free_vertex();
            r.eisenbud_goto();
            r.verify_codes();
        } else {
            throw Error(Errc::invalid_argument, "unknown command");
        }
        return r.finish();
    } catch (const Error& e) {
        throw Error(e.code(), job.command + ": " + e.what());
    }
}

int exit_code_for(Errc code) noexcept {
    switch (code) {
        case Errc::budget_exceeded:
        case Errc::size_limit: return 3;
        default: return 2;
    }
}

std::vector<std::string> write_fixtures(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    struct Case {
        std::string name, input, command;
        std::uint32_t lo, hi;
    };
    const std::vector<Case> cases = {
        {"f3_graph", "8 10 3\n1 6\n1 2\n1 8\n3 2\n3 4\n5 6\n5 4\n5 8\n7 2\n7 4\n", "analyze", 1, 1},
        {"c6_f5", "6 6 5\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n", "code", 1, 1},
        {"triangle_f5", "{\"q\": 5, \"n\": 3, \"edges\": [[1, 2], [2, 3], [1, 3]]}\n", "ci", 1, 1},
        {"triangle_f4", "{\"q\": 4, \"n\": 3, \"edges\": [[1, 2], [2, 3], [1, 3]]}\n", "ci", 1, 1},
    };
    std::vector<std::string> written;
    for (const auto& k : cases) {
        const bool json_in = k.input.front() == '{';
        const fs::path in = fs::path(dir) / (k.name + (json_in ? ".json" : ".txt"));
        write_text(in, k.input);
        const auto parsed = parse_input(k.input);
        JobSpec job;
        job.command = k.command;
        job.degree_lo = k.lo;
        job.degree_hi = k.hi;
        job.timings = false;
        const auto rep = run(job, parsed.clutter, parsed.q);
        const fs::path out = fs::path(dir) / (k.name + "." + k.command + ".report.json");
        write_text(out, to_json(rep).dump(2) + "\n");
        written.push_back(in.string());
        written.push_back(out.string());
    }
    return written;
}

int main_entry(int argc, char** argv) {
    CLI::App app{"Toric sets of clutters: cardinalities, Hilbert functions, complete intersections and codes"};
    JobSpec job;
    std::string degree;
    std::optional<std::uint32_t> q;
    bool no_timings = false;
    app.add_option("command", job.command, "analyze | hilbert | code | ci | verify | predict | fixtures")
        ->required()
        ->check(CLI::IsMember({"analyze", "hilbert", "code", "ci", "verify", "predict", "fixtures"}));
    app.add_option("input", job.input_path, "input file (edge list or JSON); '-' or omitted reads stdin");
    app.add_option("--inline", job.inline_text, "input text given on the command line");
    app.add_option("--q", q, "field order, overriding the input");
    app.add_option("--degree,--code-degree", degree, "degree or range a..b for code commands");
    app.add_option("--budget", job.budget, "work budget for point generation and distance search")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", job.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--seed", job.seed, "seed for the randomized checks of verify");
    app.add_option("--out", job.out, "write the JSON report here (fixtures: output directory)");
    app.add_option("--dump-points", job.dump_points, "write the point sets X, Y and X* as JSON to this file");
    app.add_flag("--no-timings", no_timings, "omit timings from the report");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    job.timings = !no_timings;
    job.q = q;

    try {
        if (!degree.empty()) std::tie(job.degree_lo, job.degree_hi) = parse_degree_range(degree);
        if (job.command == "fixtures") {
            for (const auto& p : write_fixtures(job.out.empty() ? "tests/fixtures" : job.out)) std::cout << p << "\n";
            return 0;
        }
        std::string text;
        if (!job.inline_text.empty()) {
            text = job.inline_text;
        } else if (job.input_path.empty() || job.input_path == "-") {
            text = read_all(std::cin);
        } else {
            std::ifstream in(job.input_path);
            if (!in) throw Error(Errc::invalid_argument, "cannot open " + job.input_path);
            text = read_all(in);
        }
        auto parsed = parse_input(text);
        if (job.q) {
            check_q(*job.q);
            parsed.q = *job.q;
        }
        const auto rep = run(job, parsed.clutter, parsed.q);
        const auto j = to_json(rep);
        if (!job.out.empty()) write_text(job.out, j.dump(2) + "\n");
        if (!job.dump_points.empty()) {
            const Field f(parsed.q);
            const ojson dump{{"X", points_to_json(projective_toric_set(parsed.clutter, f, job.budget))},
                             {"Y", points_to_json(projective_closure_points(parsed.clutter, f, job.budget))},
                             {"X*", points_to_json(affine_toric_set(parsed.clutter, f, job.budget))}};
            write_text(job.dump_points, dump.dump(1) + "\n");
        }
        if (job.format == "json")
            std::cout << j.dump(2) << "\n";
        else
            std::cout << render_table(rep);
        if (rep.mismatches() > 0) return 1;
        for (const auto& row : rep.codes)
            if (!row.params.exact) return 3;
        return 0;
    } catch (const Error& e) {
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

}  // namespace toric::cli

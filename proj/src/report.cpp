#include <iomanip>
#include <sstream>

#include "toric/cli.hpp"

namespace toric::cli {

using ojson = nlohmann::ordered_json;

std::size_t Report::mismatches() const {
    return std::size_t(std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.verdict == "mismatch"; }));
}

ojson to_json(const Report& r) {
    ojson j;
    j["command"] = r.command;
    j["input"] = ojson{{"q", r.q}, {"n", r.n}, {"edges", r.edges}};
    j["facts"] = r.facts;
    j["invariants"] = r.invariants;
    ojson vs = ojson::array();
    for (const auto& v : r.verdicts) {
        ojson e{{"quantity", v.quantity}, {"theorem", v.theorem}, {"predicted", {v.lo, v.hi}}};
        e["computed"] = v.computed ? ojson(*v.computed) : ojson(nullptr);
        e["verdict"] = v.verdict;
        vs.push_back(std::move(e));
    }
    j["verdicts"] = std::move(vs);
    ojson cs = ojson::array();
    for (const auto& c : r.codes) {
        const auto& p = c.params;
        cs.push_back(ojson{{"set", c.set},
                           {"degree", c.degree},
                           {"parameters", {{"n", p.n}, {"k", p.k}, {"d", p.d}, {"exact", p.exact}, {"bounds", {p.lo, p.hi}}}},
                           {"method", c.method}});
    }
    j["codes"] = std::move(cs);
    j["notes"] = r.notes;
    j["timings"] = r.timings;
    return j;
}

Report report_from_json(const ojson& j) {
    try {
        Report r;
        r.command = j.at("command").get<std::string>();
        r.q = j.at("input").at("q").get<std::uint32_t>();
        r.n = j.at("input").at("n").get<int>();
        r.edges = j.at("input").at("edges").get<std::vector<std::vector<int>>>();
        r.facts = j.at("facts");
        r.invariants = j.at("invariants");
        for (const auto& e : j.at("verdicts")) {
            Verdict v;
            v.quantity = e.at("quantity").get<std::string>();
            v.theorem = e.at("theorem").get<std::string>();
            v.lo = e.at("predicted").at(0).get<std::uint64_t>();
            v.hi = e.at("predicted").at(1).get<std::uint64_t>();
            if (!e.at("computed").is_null()) v.computed = e.at("computed").get<std::uint64_t>();
            v.verdict = e.at("verdict").get<std::string>();
            r.verdicts.push_back(std::move(v));
        }
        for (const auto& e : j.at("codes")) {
            CodeRow c;
            c.set = e.at("set").get<std::string>();
            c.degree = e.at("degree").get<std::uint32_t>();
            const auto& p = e.at("parameters");
            c.params.n = p.at("n").get<std::uint64_t>();
            c.params.k = p.at("k").get<std::uint64_t>();
            c.params.d = p.at("d").get<std::uint64_t>();
            c.params.exact = p.at("exact").get<bool>();
            c.params.lo = p.at("bounds").at(0).get<std::uint64_t>();
            c.params.hi = p.at("bounds").at(1).get<std::uint64_t>();
            c.method = e.at("method").get<std::string>();
            r.codes.push_back(std::move(c));
        }
        r.notes = j.at("notes").get<std::vector<std::string>>();
        r.timings = j.at("timings");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, std::string("report JSON: ") + e.what());
    }
}

namespace {

std::string edges_text(const std::vector<std::vector<int>>& edges) {
    std::ostringstream s;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) s << ' ';
        s << '{';
        for (std::size_t j = 0; j < edges[i].size(); ++j) s << (j ? "," : "") << edges[i][j];
        s << '}';
    }
    return s.str();
}

std::string range_text(std::uint64_t lo, std::uint64_t hi) {
    if (lo == hi) return std::to_string(lo);
    return "[" + std::to_string(lo) + ", " + (hi == UINT64_MAX ? std::string("inf") : std::to_string(hi)) + "]";
}

}  // namespace

std::string render_table(const Report& r) {
    std::ostringstream s;
    s << r.command << ": n=" << r.n << " q=" << r.q << " edges " << edges_text(r.edges) << "\n";
    if (!r.facts.empty()) {
        s << "\nfacts\n";
        for (const auto& [k, v] : r.facts.items()) s << "  " << std::left << std::setw(18) << k << v.dump() << "\n";
    }
    if (!r.invariants.empty()) {
        s << "\ninvariants\n";
        for (const auto& [k, v] : r.invariants.items()) s << "  " << std::left << std::setw(18) << k << v.dump() << "\n";
    }
    if (!r.codes.empty()) {
        s << "\ncodes\n";
        for (const auto& c : r.codes) {
            const auto& p = c.params;
            s << "  C_" << c.set << "(" << c.degree << ")  [" << p.n << ", " << p.k << ", "
              << (p.exact ? std::to_string(p.d) : range_text(p.lo, p.hi)) << "]" << (p.exact ? "" : "  bound-only")
              << "  (" << c.method << ")\n";
        }
    }
    if (!r.verdicts.empty()) {
        s << "\nverdicts\n";
        std::size_t wq = 8, wt = 7;
        for (const auto& v : r.verdicts) {
            wq = std::max(wq, v.quantity.size());
            wt = std::max(wt, v.theorem.size());
        }
        for (const auto& v : r.verdicts) {
            s << "  " << std::left << std::setw(int(wq) + 2) << v.quantity << std::setw(int(wt) + 2) << v.theorem
              << std::setw(16) << range_text(v.lo, v.hi) << std::setw(10)
              << (v.computed ? std::to_string(*v.computed) : std::string("-")) << v.verdict << "\n";
        }
        s << "  mismatches: " << r.mismatches() << "\n";
    }
    for (const auto& n : r.notes) s << "note: " << n << "\n";
    if (!r.timings.empty()) {
        s << "\ntimings (s)\n";
        for (const auto& [k, v] : r.timings.items())
            s << "  " << std::left << std::setw(18) << k << std::fixed << std::setprecision(4) << v.get<double>() << "\n";
    }
    return s.str();
}

ojson points_to_json(const PointSet& x) {
    ojson pts = ojson::array(), raw = ojson::array();
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto p = x.point(i);
        pts.push_back(std::vector<Elem>(p.begin(), p.end()));
        if (x.kind() == PointKind::closure) {
            auto r = x.raw(i);
            raw.push_back(std::vector<Elem>(r.begin(), r.end()));
        }
    }
    ojson j{{"q", x.field().order()}, {"kind", std::string(kind_name(x.kind()))}, {"dim", x.dim()}, {"points", pts}};
    if (x.kind() == PointKind::closure) j["raw"] = raw;
    return j;
}

PointSet points_from_json(const ojson& j) {
    try {
        const Field f(j.at("q").get<std::uint32_t>());
        const auto name = j.at("kind").get<std::string>();
        PointKind kind;
        if (name == kind_name(PointKind::affine))
            kind = PointKind::affine;
        else if (name == kind_name(PointKind::projective))
            kind = PointKind::projective;
        else if (name == kind_name(PointKind::closure))
            kind = PointKind::closure;
        else
            throw Error(Errc::parse_error, "unknown point kind '" + name + "'");
        const auto dim = j.at("dim").get<std::size_t>();
        auto flat = [&](const ojson& rows) {
            std::vector<Elem> out;
            for (const auto& row : rows) {
                auto v = row.get<std::vector<std::uint32_t>>();
                if (v.size() != dim) throw Error(Errc::parse_error, "point of wrong dimension");
                for (auto c : v) out.push_back(f.element(c));
            }
            return out;
        };
        auto rows = flat(j.at("points"));
        std::vector<Elem> raw;
        if (kind == PointKind::closure) raw = flat(j.at("raw"));
        auto out = PointSet::from_rows(f, kind, dim, std::move(rows), std::move(raw));
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, std::string("point dump: ") + e.what());
    }
}

}  // namespace toric::cli

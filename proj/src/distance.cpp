#include "toric/distance.hpp"

#include <algorithm>
#include <bit>

#include "toric/hilbert.hpp"

namespace toric {

namespace {

constexpr std::size_t kMitmMaxEntries = std::size_t(1) << 22;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
    if (a == 0 || b == 0) return 0;
    return a > UINT64_MAX / b ? UINT64_MAX : a * b;
}

struct Best {
    std::uint64_t weight = UINT64_MAX;
    std::vector<Elem> codeword;

    bool offer(std::uint64_t w, const std::vector<Elem>& c) {
        if (w >= weight) return false;
        weight = w;
        codeword = c;
        return true;
    }
};

// Row vectors pre-multiplied by every nonzero scalar: scaled(i, c) = c * rows[i].
class ScaledRows {
public:
    ScaledRows(const Field& f, const Matrix& rows) : q_(f.order()), len_(rows.cols), data_(rows.rows * (q_ - 1) * len_) {
        for (std::size_t i = 0; i < rows.rows; ++i)
            for (std::uint32_t c = 1; c < q_; ++c) {
                Elem* dst = data_.data() + (i * (q_ - 1) + (c - 1)) * len_;
                for (std::size_t j = 0; j < len_; ++j) dst[j] = f.mul(Elem(c), rows.at(i, j));
            }
    }

    const Elem* get(std::size_t i, Elem c) const noexcept { return data_.data() + (i * (q_ - 1) + (c - 1)) * len_; }
    std::size_t length() const noexcept { return len_; }

private:
    std::uint32_t q_;
    std::size_t len_;
    std::vector<Elem> data_;
};

inline void add_into(const Field& f, Elem* acc, const Elem* v, std::size_t n) noexcept {
    if (f.degree() == 1) {
        const Elem p = Elem(f.characteristic());
        for (std::size_t j = 0; j < n; ++j) {
            const Elem s = Elem(acc[j] + v[j]);
            acc[j] = std::min(s, Elem(s - p));  // s - p wraps when s < p
        }
    } else if (f.characteristic() == 2) {
        for (std::size_t j = 0; j < n; ++j) acc[j] ^= v[j];
    } else {
        for (std::size_t j = 0; j < n; ++j) acc[j] = f.add(acc[j], v[j]);
    }
}

inline std::uint64_t count_nonzero(const Elem* v, std::size_t n) noexcept {
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < n; ++j) w += v[j] != 0;
    return w;
}

// Information sets taken greedily from the columns not yet covered; the last
// one may be partial (rank r < k), completed with earlier columns.
struct InfoSet {
    std::size_t r = 0;
    std::vector<std::size_t> info;  // k original columns carrying the identity
    std::vector<std::size_t> rest;  // n - k original columns
    Matrix redundancy;              // k x (n - k)
};

std::vector<InfoSet> information_sets(const Field& f, const Matrix& g) {
    const std::size_t k = g.rows, n = g.cols;
    std::vector<InfoSet> out;
    std::vector<bool> covered(n, false);
    for (;;) {
        std::vector<std::size_t> order;
        for (std::size_t c = 0; c < n; ++c)
            if (!covered[c]) order.push_back(c);
        const std::size_t fresh = order.size();
        if (fresh == 0) break;
        for (std::size_t c = 0; c < n; ++c)
            if (covered[c]) order.push_back(c);
        Matrix perm(k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) perm.at(i, j) = g.at(i, order[j]);
        Echelon e = row_reduce(f, std::move(perm));
        InfoSet s;
        std::vector<bool> is_pivot(n, false);
        for (auto pc : e.pivot_cols) {
            is_pivot[pc] = true;
            if (pc < fresh) ++s.r;
            s.info.push_back(order[pc]);
        }
        if (s.r == 0) break;
        s.redundancy = Matrix(k, n - k);
        std::size_t col = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (is_pivot[j]) continue;
            s.rest.push_back(order[j]);
            for (std::size_t i = 0; i < k; ++i) s.redundancy.at(i, col) = e.reduced.at(i, j);
            ++col;
        }
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            if (e.pivot_cols[i] < fresh) covered[order[e.pivot_cols[i]]] = true;
        out.push_back(std::move(s));
    }
    return out;
}

class InfoSetSearch {
public:
    InfoSetSearch(const Field& f, const Matrix& g) : f_(f), k_(g.rows), n_(g.cols), sets_(information_sets(f, g)) {
        for (const auto& s : sets_) {
            scaled_.emplace_back(f, s.redundancy);
            lb_ += contribution(s, 0);
        }
    }

    std::size_t completed_weight() const noexcept { return w_; }

    std::uint64_t contribution(const InfoSet& s, std::size_t w) const noexcept {
        const std::size_t deficit = k_ - s.r;
        return w + 1 > deficit ? w + 1 - deficit : 0;
    }

    /// Weight every codeword not yet seen must have.
    std::uint64_t lower_bound() const noexcept { return lb_; }

    /// Cost of the next step: one information set at weight completed_weight() + 1.
    std::uint64_t next_step_cost() const noexcept {
        const std::size_t w = w_ + 1;
        if (w > k_) return UINT64_MAX;
        return sat_mul(sat_mul(binomial(k_, w), saturating_pow(f_.order() - 1, w - 1)), n_ - k_ + 1);
    }

    bool exhausted() const noexcept { return w_ >= k_; }

    /// Enumerates every codeword of information weight w_ + 1 on the next
    /// set that can still raise the bound; closes the round after the last.
    void run_step(Best& best, std::uint64_t& examined) {
        const std::size_t w = w_ + 1;
        while (next_ < sets_.size() && contribution(sets_[next_], w) == 0) ++next_;
        if (next_ < sets_.size()) {
            const auto& s = sets_[next_];
            enumerate(next_, w, best, examined);
            lb_ += contribution(s, w) - contribution(s, w - 1);
            ++next_;
        }
        while (next_ < sets_.size() && contribution(sets_[next_], w) == 0) ++next_;
        if (next_ == sets_.size()) {
            next_ = 0;
            w_ = w;
        }
    }

private:
    void enumerate(std::size_t j, std::size_t w, Best& best, std::uint64_t& examined) {
        const InfoSet& s = sets_[j];
        const ScaledRows& rows = scaled_[j];
        const std::size_t r = n_ - k_;
        const Elem qm1 = Elem(f_.order() - 1);
        std::vector<std::size_t> comb(w);
        for (std::size_t i = 0; i < w; ++i) comb[i] = i;
        std::vector<Elem> acc(r), value(w), codeword(n_);
        for (;;) {
            std::fill(acc.begin(), acc.end(), Elem(0));
            for (std::size_t t = 0; t < w; ++t) {
                value[t] = 1;
                add_into(f_, acc.data(), rows.get(comb[t], 1), r);
            }
            for (;;) {
                const std::uint64_t wt = w + count_nonzero(acc.data(), r);
                examined += r + 1;
                if (wt < best.weight) {
                    std::fill(codeword.begin(), codeword.end(), Elem(0));
                    for (std::size_t t = 0; t < w; ++t) codeword[s.info[comb[t]]] = value[t];
                    for (std::size_t c = 0; c < r; ++c) codeword[s.rest[c]] = acc[c];
                    best.offer(wt, codeword);
                }
                std::size_t t = 1;
                for (; t < w; ++t) {
                    const Elem old = value[t];
                    const Elem nxt = old == qm1 ? Elem(1) : Elem(old + 1);
                    value[t] = nxt;
                    add_into(f_, acc.data(), rows.get(comb[t], f_.sub(nxt, old)), r);
                    if (nxt != 1) break;
                }
                if (t >= w) break;
            }
            // next combination in lexicographic order
            std::size_t i = w;
            while (i > 0 && comb[i - 1] == k_ - w + i - 1) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t t = i; t < w; ++t) comb[t] = comb[t - 1] + 1;
        }
    }

    const Field& f_;
    std::size_t k_, n_;
    std::vector<InfoSet> sets_;
    std::vector<ScaledRows> scaled_;
    std::size_t w_ = 0;
    std::size_t next_ = 0;  // first set still to enumerate in round w_ + 1
    std::uint64_t lb_ = 0;
};

// Codewords c with c_0 = 1 and H c = 0, searched as
// h_0 + sum_A c_i h_i = -sum_B c_j h_j over supports A, B in {1..n-1}.
class SyndromeSearch {
public:
    SyndromeSearch(const Field& f, const Matrix& h) : f_(f), r_(h.rows), n_(h.cols), cols_(f, h.transposed()) {
        const unsigned bits = unsigned(std::bit_width(f.order() - 1));
        packed_ = r_ * bits <= 64;
        bits_ = bits;
    }

    std::size_t completed_level() const noexcept { return t_; }
    bool started() const noexcept { return started_; }

    std::uint64_t side_size(std::size_t a) const noexcept {
        std::uint64_t total = 0;
        for (std::size_t i = 0; i <= a; ++i)
            total = sat_add(total, sat_mul(binomial(n_ - 1, i), saturating_pow(f_.order() - 1, i)));
        return total;
    }

    std::size_t next_level() const noexcept { return started_ ? t_ + 1 : 0; }

    bool feasible(std::size_t t) const noexcept { return side_size((t + 1) / 2) <= kMitmMaxEntries; }

    std::uint64_t cost(std::size_t t) const noexcept {
        const std::size_t a = (t + 1) / 2, b = t / 2;
        const std::uint64_t table = a == a_built_ && built_ ? 0 : side_size(a);
        return sat_mul(sat_add(table, side_size(b)), r_ + 1);
    }

    /// Lightest anchored codeword of weight <= 1 + t; after this call every
    /// anchored codeword lighter than 2 + t has been accounted for.
    void run_level(std::size_t t, Best& best, std::uint64_t& examined) {
        const std::size_t a = (t + 1) / 2, b = t / 2;
        if (!built_ || a != a_built_) build(a, examined);
        std::vector<Elem> acc(r_, 0);
        std::vector<std::uint16_t> pos;
        std::vector<Elem> coef;
        auto probe = [&]() {
            examined += r_ + 1;
            const std::uint64_t key = key_of(acc.data());
            auto [lo, hi] = std::equal_range(table_.begin(), table_.end(), std::pair<std::uint64_t, std::uint32_t>{key, 0},
                                             [](const auto& x, const auto& y) { return x.first < y.first; });
            for (auto it = lo; it != hi; ++it) {
                if (!packed_ && !left_matches(it->second, acc.data())) continue;
                std::vector<Elem> c(n_, 0);
                c[0] = 1;
                const std::uint16_t* e = entry(it->second);
                for (std::size_t i = 0; i < e[0]; ++i) c[e[1 + 2 * i]] = f_.add(c[e[1 + 2 * i]], Elem(e[2 + 2 * i]));
                for (std::size_t i = 0; i < pos.size(); ++i) c[pos[i]] = f_.add(c[pos[i]], coef[i]);
                best.offer(weight(c), c);
                if (packed_) break;
            }
        };
        walk(b, acc, pos, coef, probe);
        t_ = t;
        started_ = true;
    }

private:
    std::uint64_t key_of(const Elem* s) const noexcept {
        std::uint64_t k = 0;
        if (packed_) {
            for (std::size_t i = 0; i < r_; ++i) k = (k << bits_) | s[i];
            return k;
        }
        k = 1469598103934665603ull;
        for (std::size_t i = 0; i < r_; ++i) k = (k ^ s[i]) * 1099511628211ull;
        return k;
    }

    const std::uint16_t* entry(std::uint32_t idx) const noexcept { return left_.data() + std::size_t(idx) * stride_; }

    // -(h_0 + sum_A) for stored entry idx equals s?
    bool left_matches(std::uint32_t idx, const Elem* s) const {
        std::vector<Elem> v(cols_.get(0, 1), cols_.get(0, 1) + r_);
        const std::uint16_t* e = entry(idx);
        for (std::size_t i = 0; i < e[0]; ++i) add_into(f_, v.data(), cols_.get(e[1 + 2 * i], Elem(e[2 + 2 * i])), r_);
        for (std::size_t i = 0; i < r_; ++i)
            if (f_.neg(v[i]) != s[i]) return false;
        return true;
    }

    // Depth-first walk over supports of size exactly `size` in {1..n-1} with
    // all nonzero coefficients, keeping acc = sum of scaled columns.
    template <class Visit>
    void walk_exact(std::size_t size, std::size_t from, std::vector<Elem>& acc, std::vector<std::uint16_t>& pos,
                    std::vector<Elem>& coef, Visit& visit) {
        if (pos.size() == size) {
            visit();
            return;
        }
        const std::size_t need = size - pos.size();
        for (std::size_t i = from; i + need <= n_; ++i) {
            pos.push_back(std::uint16_t(i));
            coef.push_back(0);
            std::vector<Elem> saved(acc);
            for (std::uint32_t c = 1; c < f_.order(); ++c) {
                coef.back() = Elem(c);
                std::copy(saved.begin(), saved.end(), acc.begin());
                add_into(f_, acc.data(), cols_.get(i, Elem(c)), r_);
                walk_exact(size, i + 1, acc, pos, coef, visit);
            }
            std::copy(saved.begin(), saved.end(), acc.begin());
            pos.pop_back();
            coef.pop_back();
        }
    }

    template <class Visit>
    void walk(std::size_t max_size, std::vector<Elem>& acc, std::vector<std::uint16_t>& pos, std::vector<Elem>& coef,
              Visit& visit) {
        for (std::size_t size = 0; size <= max_size; ++size) walk_exact(size, 1, acc, pos, coef, visit);
    }

    void build(std::size_t a, std::uint64_t& examined) {
        stride_ = 1 + 2 * a;
        left_.clear();
        table_.clear();
        std::vector<Elem> acc(cols_.get(0, 1), cols_.get(0, 1) + r_);
        std::vector<Elem> neg(r_);
        std::vector<std::uint16_t> pos;
        std::vector<Elem> coef;
        auto store = [&]() {
            examined += r_ + 1;
            for (std::size_t i = 0; i < r_; ++i) neg[i] = f_.neg(acc[i]);
            const auto idx = std::uint32_t(table_.size());
            table_.emplace_back(key_of(neg.data()), idx);
            left_.push_back(std::uint16_t(pos.size()));
            for (std::size_t i = 0; i < a; ++i) {
                left_.push_back(i < pos.size() ? pos[i] : 0);
                left_.push_back(i < pos.size() ? coef[i] : 0);
            }
        };
        walk(a, acc, pos, coef, store);
        std::stable_sort(table_.begin(), table_.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        if (packed_)
            table_.erase(std::unique(table_.begin(), table_.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
                         table_.end());
        a_built_ = a;
        built_ = true;
    }

    const Field& f_;
    std::size_t r_, n_;
    ScaledRows cols_;
    bool packed_ = false;
    unsigned bits_ = 0;
    std::size_t stride_ = 1;
    std::vector<std::uint16_t> left_;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> table_;
    std::size_t a_built_ = 0;
    bool built_ = false;
    std::size_t t_ = 0;
    bool started_ = false;
};

Matrix full_rank_rows(const Field& f, const Matrix& g) { return row_reduce(f, g).reduced; }

void attach_message(const Field& f, const Matrix& g, DistanceResult& r) {
    if (r.codeword.empty()) return;
    auto it = std::find_if(r.codeword.begin(), r.codeword.end(), [](Elem e) { return e != 0; });
    if (it == r.codeword.end()) return;
    auto msg = solve_left(f, g, r.codeword);
    if (!msg) throw Error(Errc::invalid_argument, "witness is not a codeword");
    auto lead = std::find_if(msg->begin(), msg->end(), [](Elem e) { return e != 0; });
    const Elem s = f.inv(*lead);
    f.scale(*msg, s);
    f.scale(r.codeword, s);
    r.message = std::move(*msg);
}

}  // namespace

std::uint64_t scalar_classes(std::uint64_t q, std::uint64_t k) noexcept {
    std::uint64_t total = 0, term = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        total = sat_add(total, term);
        term = sat_mul(term, q);
    }
    return total;
}

DistanceResult minimum_distance_exhaustive(const Field& f, const Matrix& generator, std::uint64_t budget) {
    const std::size_t k = generator.rows, n = generator.cols;
    if (k == 0) throw Error(Errc::invalid_argument, "the zero code has no minimum distance");
    const std::uint64_t cost = sat_mul(scalar_classes(f.order(), k), n);
    if (cost > budget)
        throw Error(Errc::budget_exceeded, "exhaustive search needs " + std::to_string(cost) +
                                               " coordinate evaluations, budget is " + std::to_string(budget));
    const ScaledRows rows(f, generator);
    const Elem top = Elem(f.order() - 1);
    DistanceResult res;
    res.method = "exhaustive";
    std::uint64_t best = UINT64_MAX;
    std::vector<Elem> acc(n), msg(k);
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::fill(msg.begin(), msg.end(), Elem(0));
        msg[lead] = 1;
        std::copy(rows.get(lead, 1), rows.get(lead, 1) + n, acc.begin());
        for (;;) {
            const std::uint64_t w = count_nonzero(acc.data(), n);
            res.examined += n;
            if (w != 0 && w < best) {
                best = w;
                res.message = msg;
                res.codeword = acc;
            }
            // odometer over positions after the lead, last position fastest
            bool done = true;
            for (std::size_t p = k; p > lead + 1;) {
                --p;
                const Elem old = msg[p];
                const Elem nxt = old == top ? Elem(0) : Elem(old + 1);
                msg[p] = nxt;
                add_into(f, acc.data(), rows.get(p, f.sub(nxt, old)), n);
                if (nxt != 0) {
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
    }
    if (best == UINT64_MAX) throw Error(Errc::invalid_argument, "the zero code has no minimum distance");
    res.distance = res.lower = res.upper = best;
    res.exact = true;
    return res;
}

DistanceResult minimum_distance(const Field& f, const Matrix& generator, const DistanceOptions& opts) {
    const Matrix g = full_rank_rows(f, generator);
    const std::size_t k = g.rows, n = g.cols;
    if (k == 0) throw Error(Errc::invalid_argument, "the zero code has no minimum distance");

    const std::uint64_t exhaustive_cost = sat_mul(scalar_classes(f.order(), k), n);
    if (opts.prefer_exhaustive && exhaustive_cost <= std::min(opts.budget, kExhaustivePreferenceLimit)) {
        if (generator.rows == k) return minimum_distance_exhaustive(f, generator, opts.budget);
        DistanceResult res = minimum_distance_exhaustive(f, g, opts.budget);
        attach_message(f, generator, res);
        return res;
    }

    DistanceResult res;
    Best best;
    std::uint64_t examined = 0;
    InfoSetSearch isd(f, g);
    std::optional<SyndromeSearch> mitm;
    if (opts.transitive && k < n) mitm.emplace(f, null_space(f, g));
    std::uint64_t mitm_lb = 0;
    bool used_mitm = false;

    auto lower = [&]() { return std::max<std::uint64_t>({1, isd.lower_bound(), mitm_lb}); };

    // the first step always fits and yields a witness
    isd.run_step(best, examined);
    while (lower() < best.weight) {
        const std::uint64_t left = opts.budget > examined ? opts.budget - examined : 0;
        const std::uint64_t c_isd = isd.exhausted() ? UINT64_MAX : isd.next_step_cost();
        std::uint64_t c_mitm = UINT64_MAX;
        std::size_t t = 0;
        if (mitm) {
            t = mitm->next_level();
            if (mitm->feasible(t)) c_mitm = mitm->cost(t);
        }
        if (std::min(c_isd, c_mitm) > left) break;
        if (c_mitm < c_isd) {
            mitm->run_level(t, best, examined);
            used_mitm = true;
            // anchored search is complete up to weight 1 + t
            mitm_lb = best.weight <= 1 + t ? best.weight : 2 + t;
        } else {
            isd.run_step(best, examined);
        }
    }

    res.examined = examined;
    res.method = used_mitm ? "info-sets+mitm" : "info-sets";
    res.upper = std::min<std::uint64_t>(best.weight, n - k + 1);
    res.lower = std::min(lower(), res.upper);
    res.exact = res.lower >= best.weight;
    res.distance = res.exact ? best.weight : res.upper;
    res.codeword = best.codeword;
    attach_message(f, generator, res);
    return res;
}

}  // namespace toric

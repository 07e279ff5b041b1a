#include "hyperalg/checks.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "hyperalg/oprep.hpp"

namespace halg {

namespace {

std::string grid_str(uint32_t p, uint32_t r) {
    return "p=" + std::to_string(p) + ",r=" + std::to_string(r);
}

class Timer {
public:
    Timer() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto dt = std::chrono::steady_clock::now() - t0_;
        return std::chrono::duration<double, std::milli>(dt).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace

std::vector<Tuple> all_tuples(uint32_t p, uint32_t r) {
    auto pairs = pair_set(p);
    std::vector<Tuple> out;
    std::vector<size_t> idx(r, 0);
    while (true) {
        Tuple t;
        for (size_t i = 0; i < r; ++i) t.push_back(pairs[idx[i]]);
        out.push_back(std::move(t));
        size_t i = r;
        bool done = true;
        while (i-- > 0) {
            if (++idx[i] < pairs.size()) { done = false; break; }
            idx[i] = 0;
        }
        if (done) return out;
    }
}

Element random_ur_element(uint32_t p, uint32_t r, uint32_t max_terms,
                          std::mt19937_64& rng) {
    uint32_t bound = uint32_t(pow_u64(p, r));
    std::uniform_int_distribution<uint32_t> idx(0, bound - 1);
    std::uniform_int_distribution<uint32_t> coeff(1, p - 1);
    std::uniform_int_distribution<uint32_t> nterms(1, max_terms);
    Element e(p);
    uint32_t k = nterms(rng);
    for (uint32_t i = 0; i < k; ++i)
        e.add_term({idx(rng), idx(rng), idx(rng)}, coeff(rng));
    return e;
}

Element random_ar_element(uint32_t p, uint32_t r, uint32_t max_terms,
                          std::mt19937_64& rng) {
    uint32_t bound = uint32_t(pow_u64(p, r));
    std::uniform_int_distribution<uint32_t> idx(0, bound - 1);
    std::uniform_int_distribution<uint32_t> coeff(1, p - 1);
    std::uniform_int_distribution<uint32_t> nterms(1, max_terms);
    Element e(p);
    uint32_t k = nterms(rng);
    for (uint32_t i = 0; i < k; ++i) {
        uint32_t m = idx(rng);
        e.add_term({m, idx(rng), m}, coeff(rng));
    }
    return e;
}

CheckResult check_idempotent_system(uint32_t p, uint32_t r) {
    Timer t;
    CheckResult res{"idempotent_system", grid_str(p, r), true, "", 0};
    auto tuples = all_tuples(p, r);
    std::vector<Element> es;
    for (const Tuple& tp : tuples) es.push_back(e_idempotent(tp, p));
    Element sum = Element::zero(p);
    for (size_t i = 0; i < es.size(); ++i) {
        if (es[i] * es[i] != es[i]) {
            res.pass = false;
            res.detail = "E^2 != E at tuple " + tuple_to_string(tuples[i]);
            break;
        }
        sum = sum + es[i];
    }
    for (size_t i = 0; res.pass && i < es.size(); ++i)
        for (size_t j = 0; j < es.size(); ++j) {
            if (i == j) continue;
            if (!(es[i] * es[j]).is_zero()) {
                res.pass = false;
                res.detail = "E(" + tuple_to_string(tuples[i]) + ")*E(" +
                             tuple_to_string(tuples[j]) + ") != 0";
                break;
            }
        }
    if (res.pass && sum != Element::unit(p)) {
        res.pass = false;
        res.detail = "sum of E(a,j) != 1";
    }
    res.ms = t.ms();
    return res;
}

CheckResult check_dimension_audit(uint32_t p, uint32_t r) {
    Timer t;
    CheckResult res{"dimension_audit", grid_str(p, r), false, "", 0};
    uint64_t total = 0;
    for (const Tuple& tp : all_tuples(p, r)) total += uint64_t(1) << tuple_w(tp, p);
    uint64_t expect = pow_u64(p, 2 * r);
    res.pass = total == expect;
    res.detail = "sum 2^w = " + std::to_string(total) + ", p^{2r} = " + std::to_string(expect);
    res.ms = t.ms();
    return res;
}

CheckResult check_n_tables(uint32_t p) {
    Timer t;
    CheckResult res{"n_tables", "p=" + std::to_string(p), true, "", 0};
    if (p == 2) {
        res.detail = "divisibility oracle needs p odd";
        res.ms = t.ms();
        return res;
    }
    for (const PairAJ& pr : pair_set(p)) {
        uint32_t j = pr.two_j / 2;
        for (int eps : {0, 1}) {
            if (n_eps(eps, pr, p) != n_eps_by_division(eps, pr.a, j, p) ||
                n_tilde(eps, pr, p) != n_eps_by_division(eps, -int64_t(pr.a), j, p)) {
                res.pass = false;
                res.detail = "mismatch at pair " + pair_to_string(pr);
            }
        }
    }
    res.ms = t.ms();
    return res;
}

CheckResult check_power_form(uint32_t p) {
    Timer t;
    CheckResult res{"power_form", "p=" + std::to_string(p), true, "", 0};
    auto first_nonzero = [](const std::vector<uint32_t>& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i]) return i;
        return v.size();
    };
    for (const PairAJ& pr : pair_set(p))
        for (int eps : {0, 1}) {
            auto pc = extract_power_coeffs(b1(eps, pr, p), pr.a, p);
            if (first_nonzero(pc.yx) != n_eps(eps, pr, p) ||
                first_nonzero(pc.xy) != n_tilde(eps, pr, p)) {
                res.pass = false;
                res.detail = "mismatch at pair " + pair_to_string(pr) +
                             " eps=" + std::to_string(eps);
            }
        }
    res.ms = t.ms();
    return res;
}

CheckResult check_mult_oracle(uint32_t p, uint32_t r, uint64_t seed, uint32_t D) {
    Timer t;
    CheckResult res{"mult_oracle", grid_str(p, r), true, "", 0};
    if (D == 0) D = 2 * uint32_t(pow_u64(p, r));
    std::vector<Element> gens;
    for (uint32_t i = 0; i < r; ++i) {
        uint32_t q = uint32_t(pow_u64(p, i));
        gens.push_back(Element::x_dp(q, p));
        gens.push_back(Element::y_dp(q, p));
        gens.push_back(Element::h_binom(q, p));
    }
    auto agree = [&](const Element& a, const Element& b) {
        return OperatorRep::of(a * b, D) ==
               OperatorRep::of(a, D).compose(OperatorRep::of(b, D));
    };
    for (const Element& a : gens)
        for (const Element& b : gens)
            if (!agree(a, b)) {
                res.pass = false;
                res.detail = "generator pair disagreement";
            }
    std::mt19937_64 rng(seed);
    for (int i = 0; res.pass && i < 200; ++i) {
        Element a = random_ur_element(p, r, 4, rng);
        Element b = random_ur_element(p, r, 4, rng);
        if (!agree(a, b)) {
            res.pass = false;
            res.detail = "random pair disagreement at sample " + std::to_string(i);
        }
    }
    res.ms = t.ms();
    return res;
}

CheckResult check_operator_faithfulness(uint32_t p, uint32_t r, uint32_t D) {
    Timer t;
    CheckResult res{"operator_faithfulness", grid_str(p, r), false, "", 0};
    uint32_t q = uint32_t(pow_u64(p, r));
    if (D == 0) D = 2 * q;
    // tensor factors of total degree <= D; the top pair (q-1, q-1) is what
    // makes the family faithful
    uint32_t d_max = std::min(q - 1, D > q - 1 ? D - (q - 1) : 0);
    std::vector<std::vector<uint32_t>> rows;
    for (uint32_t ym = 0; ym < q; ++ym)
        for (uint32_t hn = 0; hn < q; ++hn)
            for (uint32_t xm = 0; xm < q; ++xm)
                rows.push_back(steinberg_tensor_flatten(
                    Element::monomial({ym, hn, xm}, 1, p), q, d_max));
    FpMat m(rows.size(), rows[0].size(), p);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    size_t rk = rank_of(std::move(m));
    res.pass = rk == rows.size();
    res.detail = "rank " + std::to_string(rk) + " of " + std::to_string(rows.size());
    res.ms = t.ms();
    return res;
}

CheckResult check_duplicate_rule(uint32_t p, uint32_t r, uint64_t seed) {
    Timer t;
    CheckResult res{"duplicate_rule", grid_str(p, r), true, "", 0};
    auto tuples = all_tuples(p, r);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, tuples.size() - 1);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int i = 0; i < 100 && res.pass; ++i) {
        const Tuple& tp = tuples[pick(rng)];
        EpsVec e1(r), e2(r);
        for (uint32_t s = 0; s < r; ++s) {
            e1[s] = uint8_t(bit(rng));
            e2[s] = is_free_position(tp[s], p) ? uint8_t(bit(rng)) : e1[s];
        }
        if (b_element(e1, tp, p) != b_element(e2, tp, p)) {
            res.pass = false;
            res.detail = "mismatch at " + tuple_to_string(tp) + " eps " +
                         eps_to_string(e1) + " vs " + eps_to_string(e2);
        }
    }
    res.ms = t.ms();
    return res;
}

CheckResult check_weight_fixation(uint32_t p, uint32_t r) {
    Timer t;
    CheckResult res{"weight_fixation", grid_str(p, r), true, "", 0};
    for (const Tuple& tp : all_tuples(p, r)) {
        Element muw = mu(weight_index(tp, p), r, p);
        for (const EpsVec& theta : x_set(tp, p).members) {
            Element b = b_element(theta, tp, p);
            if (muw * b != b) {
                res.pass = false;
                res.detail = "not fixed at " + tuple_to_string(tp) + " theta " +
                             eps_to_string(theta);
            }
        }
    }
    res.ms = t.ms();
    return res;
}

namespace {

CheckResult fold_reports(const std::vector<BlockReport>& reports, const char* name,
                         std::initializer_list<const char*> keys) {
    CheckResult res{name, "", true, "", 0};
    if (!reports.empty())
        res.grid = grid_str(reports[0].p, reports[0].r);
    for (const BlockReport& rep : reports)
        for (const char* k : keys) {
            auto it = rep.checks.find(k);
            if (it == rep.checks.end() || !it->second) {
                res.pass = false;
                res.detail = std::string(k) + " failed at tuple " + tuple_to_string(rep.tuple);
            }
        }
    return res;
}

}  // namespace

CheckResult check_block_structure(const std::vector<BlockReport>& reports) {
    return fold_reports(reports, "block_structure",
                        {"basis_independent", "structure_constants", "yx_action"});
}

CheckResult check_loewy(const std::vector<BlockReport>& reports) {
    return fold_reports(reports, "loewy_structure",
                        {"radical_powers", "loewy_series", "rigidity"});
}

CheckResult check_symmetry(const std::vector<BlockReport>& reports) {
    return fold_reports(reports, "symmetry", {"symmetric_gram"});
}

std::vector<CheckResult> verify_suite(uint32_t p, uint32_t r, bool full, uint64_t seed,
                                      uint64_t dim_cap, uint32_t oracle_degree) {
    std::vector<CheckResult> out;
    out.push_back(check_dimension_audit(p, r));
    if (p != 2) out.push_back(check_n_tables(p));
    if (!full) {
        Timer t;
        auto reports = block_decomposition(p, r, dim_cap, false);
        CheckResult res{"block_reports_quick", grid_str(p, r), true, "", 0};
        for (const BlockReport& rep : reports)
            if (!rep.all_checks_pass()) {
                res.pass = false;
                res.detail = "failure at tuple " + tuple_to_string(rep.tuple);
            }
        res.ms = t.ms();
        out.push_back(res);
        return out;
    }
    out.push_back(check_idempotent_system(p, r));
    out.push_back(check_power_form(p));
    out.push_back(check_mult_oracle(p, r, seed, oracle_degree));
    if (pow_u64(p, 3 * r) <= 1000)
        out.push_back(check_operator_faithfulness(p, r, oracle_degree));
    out.push_back(check_duplicate_rule(p, r, seed));
    out.push_back(check_weight_fixation(p, r));
    {
        Timer t;
        auto reports = block_decomposition(p, r, dim_cap, true);
        double ms = t.ms();
        auto push = [&](CheckResult res) {
            res.ms = ms / 3;
            out.push_back(std::move(res));
        };
        push(check_block_structure(reports));
        push(check_loewy(reports));
        push(check_symmetry(reports));
    }
    return out;
}

}  // namespace halg

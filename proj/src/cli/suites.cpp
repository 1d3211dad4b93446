#include "g2v/cli/suite.hpp"

#include "g2v/archnum/archnum.hpp"
#include "g2v/cubicforms/cubic_ring.hpp"
#include "g2v/cubicforms/padic.hpp"
#include "g2v/cubicforms/sampling.hpp"
#include "g2v/intertwiner/intertwiner.hpp"
#include "g2v/localzeta/coset.hpp"
#include "g2v/localzeta/local_zeta.hpp"
#include "g2v/rootsys/roots.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace g2v {

namespace {

CaseRecord record(bool ok, std::string expected, std::string actual) {
    return {"", ok ? Status::pass : Status::fail, std::move(expected), std::move(actual), ""};
}

std::string fmt(double x, int digits = 6) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

std::string padded(const std::string& key, long n) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s=%02ld", key.c_str(), n);
    return buf;
}

std::uint64_t case_seed(std::uint64_t seed, const std::string& id) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char ch : id) h = (h ^ ch) * 1099511628211ULL;
    std::uint64_t z = seed ^ h;  // splitmix64 finalizer
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rational small_rational(Rng& rng) { return Rational(uniform_int(rng, -9, 9), uniform_int(rng, 1, 6)); }

GL2Mat rational_matrix(Rng& rng) {
    while (true) {
        GL2Mat g = gl2(small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng));
        if (!det(g).is_zero()) return g;
    }
}

BinaryCubic rational_cubic(Rng& rng) { return {small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng)}; }

LocalContext random_context(Rng& rng, long p) {
    auto s = static_cast<Splitting>(uniform_int(rng, 0, 2));
    return LocalContext(p, act_left(random_unit_matrix(rng, p), unramified_maximal_cubic(s, p)));
}

std::vector<int> sorted_contents(const std::vector<Sublattice>& subs) {
    std::vector<int> out;
    for (const Sublattice& s : subs) out.push_back(s.content);
    std::sort(out.begin(), out.end());
    return out;
}

void add(std::vector<Case>& cases, std::string id, std::string anchor, std::function<CaseRecord(std::uint64_t)> run) {
    cases.push_back({std::move(id), std::move(anchor), std::move(run)});
}

void cubicforms_cases(std::vector<Case>& cases, const SuiteConfig& cfg) {
    const int n = cfg.samples;
    add(cases, "cubicforms/equivariance", "pairing and quartic invariant under GL2", [n](std::uint64_t seed) {
        Rng rng(seed);
        int ok = 0;
        for (int i = 0; i < n; ++i) {
            GL2Mat g = rational_matrix(rng);
            BinaryCubic f = rational_cubic(rng), f2 = rational_cubic(rng);
            Rational dg = det(g);
            if (quartic_q(act_left(g, f)) == dg * dg * quartic_q(f) &&
                pairing(act_left(g, f), act_left(g, f2)) == dg * pairing(f, f2) &&
                pairing(f, act_left(g, f2)) == pairing(act_right(f, g), f2))
                ++ok;
        }
        return record(ok == n, std::to_string(n) + "/" + std::to_string(n), std::to_string(ok) + "/" + std::to_string(n));
    });
    add(cases, "cubicforms/ring-axioms", "good-basis multiplication table is a commutative unital ring", [n](std::uint64_t seed) {
        Rng rng(seed);
        int ok = 0;
        for (int i = 0; i < n; ++i) {
            CubicRingTable t = ring_from_cubic(rational_cubic(rng));
            if (t.trace_zero_table_holds() && t.is_commutative() && t.is_associative() && t.is_unital()) ++ok;
        }
        return record(ok == n, std::to_string(n) + " rings", std::to_string(ok) + " rings");
    });
    add(cases, "cubicforms/ring-table-split", "multiplication table of wz(w+z)", [](std::uint64_t) {
        CubicRingTable t = ring_from_cubic({0, 1, 1, 0});
        bool ok = t.product(1, 1) == RingElem(0, -1, 0) && t.product(2, 2) == RingElem(0, 0, 1) &&
                  t.product(1, 2) == RingElem(0, 0, 0);
        return record(ok, "omega^2 = -omega, theta^2 = theta, omega theta = 0", ok ? "as expected" : "table differs");
    });
    add(cases, "cubicforms/sublattice-w3", "index-p sublattice contents of w^3 at p = 2", [](std::uint64_t) {
        auto got = sorted_contents(index_p_sublattices({1, 0, 0, 0}, PAdicContext(2)));
        std::ostringstream os;
        for (int c : got) os << c << " ";
        return record(got == std::vector<int>{-1, -1, 2}, "-1 -1 2 ", os.str());
    });
    for (long p : cfg.primes) {
        add(cases, "cubicforms/closure-basis-invariance/" + padded("p", p), "lattice closure depends only on the lattice",
            [n, p](std::uint64_t seed) {
                Rng rng(seed);
                PAdicContext ctx(p);
                int ok = 0;
                for (int i = 0; i < n; ++i) {
                    BinaryCubic f = random_cubic(rng, 9);
                    if (f.is_zero()) f = {1, 0, 0, 1};
                    GL2Mat m = random_integral_matrix(rng, 2 * p);
                    if (det(m).is_zero()) m = gl2(1, 0, 0, 1);
                    GL2Mat u = random_unit_matrix(rng, p);
                    if (closure_test(f, GL2Mat(u * m), ctx) == closure_test(f, m, ctx)) ++ok;
                }
                return record(ok == n, std::to_string(n) + " agree", std::to_string(ok) + " agree");
            });
        add(cases, "cubicforms/sublattice-contents/" + padded("p", p), "sublattice content table by factorization type",
            [n, p](std::uint64_t seed) {
                Rng rng(seed);
                PAdicContext ctx(p);
                int checked = 0, bad = 0;
                for (int i = 0; i < n; ++i) {
                    auto s = static_cast<Splitting>(i % 3);
                    BinaryCubic fmax = act_left(random_unit_matrix(rng, p), unramified_maximal_cubic(s, p));
                    BinaryCubic f = act_right(fmax, random_integral_matrix(rng, p * p));
                    if (f.is_zero()) continue;
                    ++checked;
                    int c = content(f, ctx);
                    CubicType type = roots_in_P1(pow(Rational(p), -c) * f, ctx).type;
                    if (sorted_contents(index_p_sublattices(f, ctx)) != expected_sublattice_contents(type, c, p)) ++bad;
                }
                return record(checked > 0 && bad == 0, "0 mismatches",
                              std::to_string(bad) + " mismatches of " + std::to_string(checked));
            });
        add(cases, "cubicforms/subrings-index-p/" + padded("p", p), "index-p subrings of Z^3", [p](std::uint64_t) {
            auto counts = subrings_of_index(static_cast<int>(p));
            long got = counts.at(static_cast<int>(p)).count;
            return record(got == 3, "3", std::to_string(got));
        });
    }
}

void localzeta_cases(std::vector<Case>& cases, const SuiteConfig& cfg) {
    const int n = cfg.samples, vmax = cfg.max_det_val;
    for (long p : cfg.primes) {
        const std::string tag = padded("p", p);
        add(cases, "localzeta/coset-counts/" + tag, "right cosets of GL2(Z_p) by val(det)", [p, vmax](std::uint64_t) {
            std::map<int, long> per_v;
            for (const CosetRep& r : coset_reps(LocalContext::split(p), vmax)) ++per_v[r.v];
            std::ostringstream exp, got;
            bool ok = true;
            for (int v = 0; v <= vmax; ++v) {
                long want = 0;
                for (int k = 0; k <= v; ++k) want += static_cast<long>(std::pow(p, k));
                exp << want << " ";
                got << per_v[v] << " ";
                ok = ok && per_v[v] == want;
            }
            return record(ok, exp.str(), got.str());
        });
        add(cases, "localzeta/content-zero-identities/" + tag, "five content-zero combinations", [n, p](std::uint64_t seed) {
            Rng rng(seed);
            std::map<int, std::vector<GL2Mat>> by_v;
            for (const CosetRep& r : coset_reps(LocalContext::split(p), 4)) by_v[r.v].push_back(r.h);
            std::map<CubicType, int> hits;
            const int want = std::min(n, 50);
            int bad = 0;
            auto done = [&] {
                if (hits.size() < 5) return false;
                for (const auto& [t, k] : hits)
                    if (k < want) return false;
                return true;
            };
            for (int trial = 0; trial < 400 * want && !done(); ++trial) {
                LocalContext ctx = random_context(rng, p);
                const auto& pool = by_v[static_cast<int>(uniform_int(rng, 0, 4))];
                GL2Mat base = pool[uniform_int(rng, 0, static_cast<long>(pool.size()) - 1)];
                CosetRep h = make_coset(ctx, GL2Mat(base * random_unit_matrix(rng, p)));
                if (h.c != 0) continue;
                ++hits[h.type];
                if (lemma_combination(ctx, h) != c0_combination_display(h.type, h.v, p)) ++bad;
            }
            std::ostringstream os;
            for (const auto& [t, k] : hits) os << to_string(t) << ":" << k << " ";
            os << "mismatches:" << bad;
            return record(done() && bad == 0, "5 types x " + std::to_string(want) + ", mismatches:0", os.str());
        });
        add(cases, "localzeta/three-term-identity/" + tag, "scalar-translate identity and its content-one collapse",
            [p, vmax](std::uint64_t seed) {
                Rng rng(seed);
                int checked = 0, bad = 0;
                for (int i = 0; i < 3; ++i) {
                    LocalContext ctx = random_context(rng, p);
                    for (const CosetRep& h : coset_reps(ctx, vmax + 2)) {
                        if (h.c < 1) continue;
                        ++checked;
                        ZPoly three = ZPoly(p * p) * p_poly(scalar_translate(ctx, h, 1)) +
                                      p_poly(scalar_translate(ctx, h, -1)) + ZPoly(h.n_roots - 1) * p_poly(h);
                        if (three != g_poly(h.v, h.c, p) || m_poly_h(ctx, h) != m_poly_generic(h.v, h.c, h.type, p)) ++bad;
                    }
                }
                return record(checked > 0 && bad == 0, "0 mismatches", std::to_string(bad) + " mismatches of " + std::to_string(checked));
            });
        add(cases, "localzeta/a0-equivalence/" + tag, "lattice conditions versus content divisibility", [p, vmax](std::uint64_t) {
            int checked = 0, bad = 0;
            for (const CosetRep& r : coset_reps(LocalContext::split(p), vmax))
                for (int k = 0; k <= 4; ++k) {
                    Rational lambda = pow(Rational(p), k);
                    ++checked;
                    if (a0_bullets(lambda, r.h, p) != a0_content(lambda, r.h, p)) ++bad;
                }
            return record(bad == 0, "0 disagreements", std::to_string(bad) + " disagreements of " + std::to_string(checked));
        });
        add(cases, "localzeta/hecke-contents/" + tag, "Hecke translate contents follow the factorization type",
            [p, vmax](std::uint64_t seed) {
                Rng rng(seed);
                int bad = 0, checked = 0;
                LocalContext ctx = random_context(rng, p);
                for (const CosetRep& r : coset_reps(ctx, vmax)) {
                    std::vector<int> got;
                    for (const CosetRep& t : hecke_translates(ctx, r, Hecke::T_p)) got.push_back(t.c);
                    std::sort(got.begin(), got.end());
                    ++checked;
                    if (got != expected_sublattice_contents(r.type, r.c, p)) ++bad;
                }
                return record(bad == 0, "0 mismatches", std::to_string(bad) + " mismatches of " + std::to_string(checked));
            });
    }
}

void rootsys_cases(std::vector<Case>& cases) {
    const WeylWord table_word = parse_word("[412434214]"), other = parse_word("[412343214]");
    add(cases, "rootsys/heisenberg-walk", "reflection walk of lambda_s along the long word", [=](std::uint64_t) {
        auto rows = reflection_walk(lambda_s(), table_word);
        bool ok = rows == expected_heisenberg_walk();
        return record(ok, "9 reference rows", ok ? "9 rows match" : render_walk(rows));
    });
    add(cases, "rootsys/word-validity", "reduced word negating exactly the Heisenberg roots", [=](std::uint64_t) {
        WordCheck a = word_check(table_word), b = word_check(other);
        bool same = weyl_matrix(table_word) == weyl_matrix(other);
        bool ok = a.length_reduced && a.n_roots_negated && b.length_reduced && b.n_roots_negated && a.inversions == 9 && same;
        return record(ok, "both spellings reduced, 9 roots negated, same element",
                      "inversions " + std::to_string(a.inversions) + "/" + std::to_string(b.inversions) +
                          (same ? ", same element" : ", different elements"));
    });
    add(cases, "rootsys/lambda-ratio", "Lambda-ratio product of the walk", [=](std::uint64_t) {
        GammaExpr a = lambda_ratio_product(reflection_walk(lambda_s(), table_word));
        GammaExpr b = lambda_ratio_product(reflection_walk(lambda_s(), other));
        bool ok = a == expected_lambda_ratio() && b == a;
        return record(ok, expected_lambda_ratio().str(), a.str());
    });
    add(cases, "rootsys/endpoint", "both spellings carry lambda_s to the same character", [=](std::uint64_t) {
        Character a = apply_word(table_word, lambda_s()), b = apply_word(other, lambda_s());
        return record(a == b, a.str(), b.str());
    });
}

void intertwiner_cases(std::vector<Case>& cases, const SuiteConfig& cfg) {
    for (int ell : cfg.weights) {
        const std::string tag = padded("l", ell);
        add(cases, "intertwiner/eigenvalue/" + tag, "M_poly eigenvalue on x^l y^l in both closed forms", [ell](std::uint64_t) {
            RatFun e = eigencheck(ell);
            GammaExpr g = gamma_normalize(c_poly_gamma(ell));
            bool ok = e == c_poly_product(ell) && g.gamma_factors().empty() && g.prefactor() == e &&
                      g.two_exponent() == Affine() && g.pi_exponent() == Affine();
            return record(ok, c_poly_product(ell).str(), e.str());
        });
        add(cases, "intertwiner/c-prime/" + tag, "two-step composition constant c'(s)", [ell](std::uint64_t) {
            CPrimeCheck r = lemma_cs_check(ell);
            return record(r.xy_after_pm && r.pm_after_xy, "both compositions", std::string(r.xy_after_pm ? "xy-after-pm " : "") +
                                                                                   (r.pm_after_xy ? "pm-after-xy" : ""));
        });
        add(cases, "intertwiner/functional-equation/" + tag, "N(s) c_l(s) = N(5-s)", [ell](std::uint64_t) {
            ConstantComparison r = eisenstein_fe_check(ell);
            bool ok = r.equal && r.constant && r.constant->is_one();
            return record(ok, "constant 1", r.constant ? "constant " + r.constant->str() : "not a constant multiple");
        });
        add(cases, "intertwiner/reflected-gamma/" + tag, "Gamma-shift identity under s -> 5-s", [ell](std::uint64_t) {
            ConstantComparison r = reflected_gamma_identity(ell);
            bool ok = r.equal && r.constant && r.constant->is_one();
            return record(ok, "constant 1", r.constant ? "constant " + r.constant->str() : "not a constant multiple");
        });
    }
    add(cases, "intertwiner/pjk", "series, closed form and recurrence of p_jk(w)", [](std::uint64_t) {
        FuvCheck r = fuv_check(10);
        bool ok = r.series_equals_closed_form && r.recurrence_holds && r.symmetric;
        return record(ok, "66 pairs consistent", std::to_string(r.pairs_checked) + " pairs" + (ok ? " consistent" : " inconsistent"));
    });
}

void gammaledger_cases(std::vector<Case>& cases, const SuiteConfig& cfg) {
    for (int ell : cfg.weights) {
        const std::string tag = padded("l", ell);
        add(cases, "gammaledger/normalization-display/" + tag, "archimedean normalization display with constant 1",
            [ell](std::uint64_t) {
                ConstantComparison r = archimedean_normalization_identity(ell);
                bool ok = r.equal && r.constant && r.constant->is_one();
                return record(ok, "constant 1", r.constant ? "constant " + r.constant->str() : "not a constant multiple");
            });
        add(cases, "gammaledger/trivial-zeros/" + tag, "pole orders 3 at even and 4 at odd -n, n >= 2l-1", [ell](std::uint64_t) {
            auto orders = trivial_zero_orders(ell, 2L * ell - 1, 2L * ell + 8);
            bool ok = true;
            std::ostringstream os;
            for (const auto& [s0, k] : orders) {
                os << s0 << ":" << k << " ";
                ok = ok && k == (s0 % 2 == 0 ? 3 : 4);
            }
            return record(ok, "3 at even, 4 at odd", os.str());
        });
    }
    add(cases, "gammaledger/normalize-idempotent", "normalization is idempotent and value-preserving", [n = cfg.samples](std::uint64_t seed) {
        Rng rng(seed);
        int ok = 0;
        for (int i = 0; i < n; ++i) {
            GammaExpr e = GammaExpr(Rational(uniform_int(rng, 1, 9)));
            for (int k = 0; k < 3; ++k)
                e *= GammaExpr::gamma(Affine(Rational(uniform_int(rng, 1, 2), uniform_int(rng, 1, 2)), Rational(uniform_int(rng, -6, 6), 2)),
                                      static_cast<int>(uniform_int(rng, -2, 2)));
            GammaExpr g = gamma_normalize(e);
            const double s0 = 7.25, a = e.evaluate(s0), b = g.evaluate(s0);
            if (gamma_normalize(g) == g && std::abs(a - b) <= 1e-10 * std::abs(a)) ++ok;
        }
        return record(ok == n, std::to_string(n) + " samples", std::to_string(ok) + " samples");
    });
}

void archnum_cases(std::vector<Case>& cases, const SuiteConfig& cfg) {
    const double tol = cfg.tol;
    for (double s : {1.5, 2.0, 3.0})
        for (int j : {0, 2, 4}) {
            std::ostringstream id;
            id << "archnum/sl2/s=" << std::fixed << std::setprecision(2) << s << "/" << padded("j", j);
            add(cases, id.str(), "SL2 integral against its Gamma closed form", [s, j, tol](std::uint64_t) {
                Sl2Report r = sl2_check(s, j, tol);
                return record(r.pass, "relative error <= " + fmt(tol), fmt(r.error, 3));
            });
        }
    add(cases, "archnum/jprime-ratio", "J'(s) against 2^(-6s) Gamma(2s) Gamma(3s-1/2)/Gamma(s+1/2)^3 up to a constant",
        [](std::uint64_t) {
            RatioReport r = jprime_check({1.0, 1.25, 1.5, 2.0});
            return record(r.pass, "relative spread <= 1e-4", "spread " + fmt(r.relative_spread, 3) + ", ratio " + fmt(r.mean, 12));
        });
    add(cases, "archnum/jprime-jacobian", "Jacobian of the root coordinates", [](std::uint64_t) {
        bool ok = jacobian_check();
        return record(ok, "t^3 (r1-r2)(r2-r3)(r3-r1)", ok ? "matches" : "differs");
    });
    add(cases, "archnum/jprime-quartic", "quartic invariant in root coordinates", [n = cfg.samples](std::uint64_t seed) {
        bool ok = quartic_ratio_check(n, seed);
        return record(ok, "t^4 prod (r_i - r_j)^2", ok ? "matches" : "differs");
    });
    for (int ell : cfg.weights) {
        add(cases, "archnum/chain/" + padded("l", ell), "assembled archimedean integral against its Gamma factor", [ell](std::uint64_t) {
            ChainReport r = istar_chain_check(ell, {2.5, 3.0, 3.5, 4.5});
            return record(r.pass, "ratio spread <= 1e-6 and symbolic constant",
                          "spread " + fmt(r.numeric.relative_spread, 3) + ", constant " +
                              (r.symbolic.constant ? r.symbolic.constant->str() : std::string("none")) + " = " + fmt(r.numeric.mean, 12));
        });
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"cubicforms", "localzeta", "rootsys", "intertwiner", "gammaledger", "archnum", "all"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<Case> build_suite(const std::string& name, const SuiteConfig& config) {
    if (!is_suite(name)) throw std::invalid_argument("unknown suite '" + name + "'");
    config.validate();
    std::vector<Case> cases;
    const bool all = name == "all";
    if (all || name == "cubicforms") cubicforms_cases(cases, config);
    if (all || name == "localzeta") localzeta_cases(cases, config);
    if (all || name == "rootsys") rootsys_cases(cases);
    if (all || name == "intertwiner") intertwiner_cases(cases, config);
    if (all || name == "gammaledger") gammaledger_cases(cases, config);
    if (all || name == "archnum") archnum_cases(cases, config);
    return cases;
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Case> cases = build_suite(name, config);
    std::vector<CaseRecord> results(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            CaseRecord r;
            try {
                r = cases[i].run(case_seed(config.seed, cases[i].id));
            } catch (const std::exception& e) {
                r = record(false, "no exception", std::string("exception: ") + e.what());
            }
            r.id = cases[i].id;
            r.anchor = cases[i].anchor;
            results[i] = std::move(r);
        }
    };
    unsigned jobs = config.jobs > 0 ? static_cast<unsigned>(config.jobs) : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::sort(results.begin(), results.end(), [](const CaseRecord& a, const CaseRecord& b) { return a.id < b.id; });
    Report report{name, config, std::move(results), 0};
    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace g2v

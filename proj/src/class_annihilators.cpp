#include "stickel/class_annihilators.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "stickel/arith.hpp"
#include "stickel/group_ring.hpp"
#include "stickel/padic.hpp"

namespace stickel {

namespace {

std::int64_t default_root(int p, std::optional<std::int64_t> v) {
    return v.value_or(smallest_primitive_root(p));
}

void require_3_mod_4(int p) {
    if (p < 7 || p % 4 != 3 || !is_prime(static_cast<std::int64_t>(p))) {
        throw UsageError("needs a prime p = 3 mod 4, p >= 7");
    }
}

Json decimal_list(const std::vector<mpz_class>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(dec(x));
    return out;
}

mpz_class powm(const mpz_class& b, const mpz_class& e, const mpz_class& n) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace

AnnihilatorGcds annihilator_gcds(int p, std::int64_t v, const mpz_class& h) {
    if (h == 2) throw UsageError("h must be odd");
    if (h < 3 || !is_prime(h)) throw UsageError("h must be an odd prime");
    if (h == p) throw UsageError("h must differ from p");
    std::vector<mpz_class> pc(static_cast<std::size_t>(p - 1));
    std::vector<mpz_class> tc(static_cast<std::size_t>(p - 1), mpz_class(1));
    for (int i = 0; i < p - 1; ++i) pc[static_cast<std::size_t>(i)] = static_cast<long>(lifted_power(v, -i, p));
    if (!is_primitive_root(v, p)) throw UsageError("v is not a primitive root mod p");
    std::vector<mpz_class> half(static_cast<std::size_t>((p - 1) / 2 + 1));
    half.front() = 1;
    half.back() = 1;
    AnnihilatorGcds out{ModPoly(h, pc), ModPoly(h, tc), ModPoly(h), ModPoly(h), {}, {}};
    out.D = gcd(out.P, out.T);
    out.D_minus = gcd(out.P, ModPoly(h, half));
    if (out.D.degree() > 0) out.roots_D = roots(out.D);
    if (out.D_minus.degree() > 0) out.roots_D_minus = roots(out.D_minus);
    return out;
}

CheckReport annihilator_check(const AnnihilatorExample& ex, std::optional<std::int64_t> v_opt) {
    Stopwatch clock;
    const int p = ex.p;
    const std::int64_t v = default_root(p, v_opt);
    CheckReport r;
    r.check = "annihilator";
    r.params = {{"p", p}, {"h", dec(ex.h)}};
    r.convention = {{"v", v}};
    const AnnihilatorGcds G = annihilator_gcds(p, v, ex.h);

    r.witnesses["deg_D"] = G.D.degree();
    r.witnesses["deg_D_minus"] = G.D_minus.degree();
    if (G.D_minus.degree() <= 8) r.witnesses["D_minus"] = G.D_minus.to_string();
    r.witnesses["roots_D_minus"] = decimal_list(G.roots_D_minus);
    if (G.D.degree() < 1 || G.D_minus.degree() < 1) r.degrade(Status::fail);

    const mpz_class hm1 = ex.h - 1;
    const std::int64_t d = static_cast<std::int64_t>(mpz_gcd_ui(nullptr, hm1.get_mpz_t(), static_cast<unsigned long>(p - 1)));
    r.witnesses["d"] = d;
    if (d != ex.d) r.degrade(Status::fail);

    bool roots_ok = true;
    for (const auto& nu : G.roots_D_minus) {
        if (powm(nu, d, ex.h) != 1 || G.P.eval(nu) != 0 || G.T.eval(nu) != 0) roots_ok = false;
    }
    r.witnesses["roots_satisfy_order_and_substitution"] = roots_ok;
    if (!roots_ok) r.degrade(Status::fail);

    if (ex.nu) {
        mpz_class target = *ex.nu;
        mpz_fdiv_r(target.get_mpz_t(), target.get_mpz_t(), ex.h.get_mpz_t());
        r.witnesses["expected_nu"] = dec(target);
        if (std::find(G.roots_D_minus.begin(), G.roots_D_minus.end(), target) != G.roots_D_minus.end()) {
            r.witnesses["nu_match"] = "direct";
        } else {
            std::optional<std::int64_t> found;
            for (std::int64_t t = 2; t < p - 1 && !found; ++t) {
                if (gcd(t, p - 1) != 1) continue;
                for (const auto& nu : G.roots_D_minus) {
                    if (powm(nu, t, ex.h) == target) {
                        found = t;
                        break;
                    }
                }
            }
            if (found) {
                r.witnesses["nu_match"] = "galois_reindexing";
                r.witnesses["reindex_exponent"] = *found;
                r.degrade(Status::monitored);
            } else {
                r.witnesses["nu_match"] = "none";
                r.degrade(Status::fail);
            }
        }
    }
    r.duration_ms = clock.elapsed_ms();
    return r;
}

mpz_class quad_alternating_sum(int p, std::int64_t v) {
    if (!is_primitive_root(v, p)) throw UsageError("v is not a primitive root mod p");
    mpz_class s = 0;
    for (int i = 0; i <= p - 2; ++i) {
        const long term = static_cast<long>(lifted_power(v, -i, p));
        if (i % 2 == 0) {
            s += term;
        } else {
            s -= term;
        }
    }
    return s;
}

std::int64_t dirichlet_h(int p) {
    require_3_mod_4(p);
    const mpz_class s = quad_alternating_sum(p, smallest_primitive_root(p));
    if (!mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(p))) {
        throw InternalError("alternating sum not divisible by p");
    }
    return -mpz_class(s / p).get_si();
}

std::int64_t quad_class_oracle(int p) {
    if (p % 4 != 3) throw UsageError("oracle needs p = 3 mod 4");
    std::int64_t count = 0;
    // b^2 - 4ac = -p, |b| <= a <= c, b >= 0 if |b| = a or a = c.
    for (std::int64_t a = 1; 3 * a * a <= p; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            const std::int64_t num = b * b + p;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            ++count;
        }
    }
    return count;
}

std::vector<std::int64_t> odd_class_primes(int p) {
    std::vector<std::int64_t> out;
    for (auto ell : prime_factors(static_cast<std::uint64_t>(quad_class_oracle(p)))) {
        if (ell != 2) out.push_back(static_cast<std::int64_t>(ell));
    }
    return out;
}

std::int64_t odd_subsum(int p, std::int64_t v) {
    std::int64_t s = 0;
    for (int i = 0; i <= p - 2; ++i) {
        if (lifted_power(v, -i, p) % 2 == 1) s += i % 2 == 0 ? 1 : -1;
    }
    return s;
}

IDelta i_delta_sum(int p, std::int64_t v, std::int64_t delta) {
    if (delta < 1 || delta > p - 2) throw UsageError("delta must lie in 1..p-2");
    const std::int64_t s = index_table(mod(v, p), p)[static_cast<std::size_t>(delta)];
    IDelta out{{}, 0};
    const int half = (p - 1) / 2;
    for (int i = 0; i <= p - 2; ++i) {
        const std::int64_t a = lifted_power(v, half - i, p);
        const std::int64_t b = lifted_power(v, half - i + s, p);
        if (a + b > p) {
            out.indices.push_back(i);
            out.alternating_sum += i % 2 == 0 ? 1 : -1;
        }
    }
    return out;
}

CheckReport quad_class_report(int p, std::optional<std::int64_t> v_opt) {
    require_3_mod_4(p);
    const std::int64_t v = default_root(p, v_opt);
    CheckReport r;
    r.check = "quad_class";
    r.params = {{"p", p}};
    r.convention = {{"v", v}};
    const mpz_class s = quad_alternating_sum(p, v);
    r.witnesses["alternating_sum"] = dec(s);
    const bool divisible = mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
    if (!divisible) {
        r.witnesses["error"] = "alternating sum not divisible by p";
        r.degrade(Status::fail);
        return r;
    }
    const std::int64_t h = -mpz_class(s / p).get_si();
    const std::int64_t oracle = quad_class_oracle(p);
    r.witnesses["h"] = h;
    r.witnesses["oracle"] = oracle;
    if (h != oracle) r.degrade(Status::fail);
    return r;
}

CheckReport odd_subsum_report(int p, std::optional<std::int64_t> v_opt) {
    require_3_mod_4(p);
    const std::int64_t v = default_root(p, v_opt);
    CheckReport r;
    r.check = "odd_subsum";
    r.params = {{"p", p}};
    r.convention = {{"v", v}};
    const std::int64_t s = odd_subsum(p, v);
    const std::int64_t h = quad_class_oracle(p);
    r.witnesses["sum"] = s;
    r.witnesses["class_number"] = h;
    if (s == 0) r.degrade(Status::fail);
    Json per_prime = Json::object();
    for (auto ell : odd_class_primes(p)) {
        const bool ok = s % ell == 0;
        per_prime[std::to_string(ell)] = ok;
        if (!ok) r.degrade(Status::fail);
    }
    r.witnesses["divisible_by_odd_class_primes"] = per_prime;
    const bool full = s % h == 0;
    r.witnesses["divisible_by_class_number"] = full;
    if (!full) r.degrade(Status::monitored);
    return r;
}

CheckReport i_delta_report(int p, std::int64_t delta, std::optional<std::int64_t> v_opt) {
    const std::int64_t v = default_root(p, v_opt);
    CheckReport r;
    r.check = "i_delta";
    r.params = {{"p", p}, {"delta", delta}};
    r.convention = {{"v", v}};
    const IDelta I = i_delta_sum(p, v, delta);
    r.witnesses["cardinality"] = I.indices.size();
    r.witnesses["alternating_sum"] = I.alternating_sum;
    if (I.indices.size() % 2 == 0 || I.alternating_sum == 0) r.degrade(Status::fail);
    if (p % 4 == 3 && p > 3) {
        Json per_prime = Json::object();
        for (auto ell : odd_class_primes(p)) {
            const bool ok = I.alternating_sum % ell == 0;
            per_prime[std::to_string(ell)] = ok;
            if (!ok) r.degrade(Status::fail);
        }
        r.witnesses["divisible_by_odd_class_primes"] = per_prime;
    }
    return r;
}

mpz_class biquadratic_S(int p, std::int64_t v) {
    if (p % 8 != 5 || !is_prime(static_cast<std::int64_t>(p))) throw UsageError("needs a prime p = 5 mod 8");
    if (!is_primitive_root(v, p)) throw UsageError("v is not a primitive root mod p");
    mpz_class even = 0;
    mpz_class odd = 0;
    for (int i = 0; i <= (p - 3) / 2; ++i) {
        const long sign = i % 2 == 0 ? 1 : -1;
        even += sign * static_cast<long>(lifted_power(v, 2 * i, p));
        odd += sign * static_cast<long>(lifted_power(v, 2 * i + 1, p));
    }
    return even * even + odd * odd;
}

CheckReport biquadratic_report(int p, std::optional<std::int64_t> v_opt) {
    const std::int64_t v = default_root(p, v_opt);
    CheckReport r;
    r.check = "biquadratic";
    r.params = {{"p", p}};
    r.convention = {{"v", v}};
    const mpz_class S = biquadratic_S(p, v);
    const mpz_class p2 = mpz_class(p) * p;
    r.witnesses["S"] = dec(S);
    const bool div_p = mpz_divisible_ui_p(S.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
    const bool div_p2 = mpz_divisible_p(S.get_mpz_t(), p2.get_mpz_t()) != 0;
    r.witnesses["divisible_by_p"] = div_p;
    r.witnesses["divisible_by_p_squared"] = div_p2;
    if (S == 0 || !div_p) {
        r.degrade(Status::fail);
    } else if (!div_p2) {
        r.degrade(Status::monitored);
    }
    return r;
}

CheckReport f_gt1_congruences(int p, std::int64_t q, std::optional<std::int64_t> v_opt) {
    const std::int64_t v = default_root(p, v_opt);
    CheckReport r;
    r.check = "f_gt1";
    r.params = {{"p", p}, {"q", q}};
    r.convention = {{"v", v}};
    const GroupRingEl S2 = build_S2(p, q, v);
    const auto f = multiplicative_order(q, p);
    const auto m = (p - 1) / f;
    r.witnesses["f"] = f;
    r.witnesses["m"] = m;
    Json coeffs = Json::array();
    for (std::int64_t i = 0; i < m; ++i) coeffs.push_back(dec(S2[static_cast<std::size_t>(i)]));
    r.witnesses["S2"] = coeffs;

    bool any_zero = false;
    Json values = Json::array();
    for (std::int64_t l = 1; l < m; ++l) {
        mpz_class s = 0;
        for (std::int64_t i = 0; i < m; ++i) {
            s += S2[static_cast<std::size_t>(i)] * static_cast<long>(powmod(v, l * f * i, p));
        }
        const std::int64_t res = mpz_fdiv_ui(s.get_mpz_t(), static_cast<unsigned long>(p));
        const std::int64_t centered = res > p / 2 ? res - p : res;
        values.push_back(centered);
        if (res == 0) any_zero = true;
    }
    r.witnesses["congruence_values"] = values;
    mpz_class total = 0;
    for (std::int64_t i = 0; i < m; ++i) total += S2[static_cast<std::size_t>(i)];
    r.witnesses["l_equals_m_sum"] = dec(total);
    r.witnesses["verdict"] = any_zero ? "no conclusion" : "p-principal";

    const bool corollary = p % 4 == 3 && f == (p - 1) / 2;
    r.witnesses["corollary_applies"] = corollary;
    if (corollary) {
        // Two half-sums of residues with odd total p(p-1)/2 cannot be equal.
        const mpz_class diff = S2[0] - S2[1];
        r.witnesses["corollary_difference_odd"] = mpz_odd_p(diff.get_mpz_t()) != 0;
        if (any_zero || !mpz_odd_p(diff.get_mpz_t())) r.degrade(Status::fail);
    } else if (any_zero) {
        r.degrade(Status::monitored);
    }
    return r;
}

CheckReport principal_prime_test(int p, std::int64_t a, const CycInt& rr) {
    CheckReport r;
    r.check = "principal_prime";
    r.params = {{"p", p}, {"a", a}, {"r", rr.to_string()}};
    if (mod(a, p) == 0) throw UsageError("a must be prime to p");
    const CycInt q1 = CycInt::integer(p, a) + pow(CycInt::lambda(p), static_cast<std::uint64_t>(p + 1)) * rr;
    const mpz_class N = norm(q1);
    r.witnesses["q1"] = q1.to_string();
    r.witnesses["norm"] = dec(N);
    if (N < 3 || !is_prime(N) || N == p) {
        r.status = Status::inapplicable;
        return r;
    }
    const mpz_class e = (N - 1) / p;
    const bool holds = (N - 1) % p == 0 && powm(mpz_class(p), e, N) == 1;
    r.witnesses["p_power_residue_is_one"] = holds;
    if (!holds) r.degrade(Status::fail);
    return r;
}

std::vector<CheckReport> principal_prime_scan(int p, std::int64_t a, int wanted, int bound) {
    std::vector<CheckReport> out;
    std::vector<long> c(static_cast<std::size_t>(p - 1), -bound);
    while (static_cast<int>(out.size()) < wanted) {
        std::vector<mpz_class> coeffs(c.begin(), c.end());
        CycInt rr(p, coeffs);
        if (!rr.is_zero()) {
            CheckReport rep = principal_prime_test(p, a, rr);
            if (rep.status != Status::inapplicable) out.push_back(std::move(rep));
        }
        std::size_t i = 0;
        while (i < c.size() && ++c[i] > bound) c[i++] = -bound;
        if (i == c.size()) break;
    }
    return out;
}

CycInt parse_cyc(int p, const std::string& text) {
    std::vector<mpz_class> red(static_cast<std::size_t>(p));
    std::stringstream ss(text);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= red.size()) throw UsageError("too many coefficients in '" + text + "'");
        mpz_class c;
        if (c.set_str(item, 10) != 0) throw UsageError("bad coefficient '" + item + "'");
        red[i++] = c;
    }
    if (i == 0) throw UsageError("empty coefficient list");
    return CycInt::from_redundant(p, std::move(red));
}

CheckReport singular_padic_profile(const CycInt& A, std::int64_t expected_q, std::optional<std::int64_t> v_opt,
                                   const BiCycInt* g) {
    Stopwatch clock;
    const int p = A.p();
    if (A.is_zero()) throw UsageError("A must be nonzero");
    const std::int64_t v = default_root(p, v_opt);
    CheckReport r;
    r.check = "singular_profile";
    r.params = {{"p", p}, {"q", expected_q}, {"A", A.to_string()}};
    r.convention = {{"v", v}};

    const GroupRingEl P = build_P(p, v);
    const std::int64_t k = 2 * p + 1;
    const int M = truncation_exponent(p, k);
    const CycInt X = apply_multiplicative(A, P, k);
    const PiValuation vm = pi_val_truncated(X - CycInt::integer(p, 1), M);
    const PiValuation vp = pi_val_truncated(X + CycInt::integer(p, 1), M);
    auto show = [](const PiValuation& x) {
        Json j = x.value ? Json(*x.value) : Json("inf");
        return x.exact ? j : Json{{"at_least", j}};
    };
    r.witnesses["val_minus_1"] = show(vm);
    r.witnesses["val_plus_1"] = show(vp);
    // 2 is a unit, so at most one of the two differences is divisible by pi.
    auto key = [](const PiValuation& x) { return x.value.value_or(INT64_MAX); };
    const bool plus = key(vp) > key(vm);
    const PiValuation& best = plus ? vp : vm;
    r.witnesses["delta"] = plus ? -1 : 1;

    if (expected_q == 0) {
        r.witnesses["case"] = "rational";
        if (!best.at_least(2 * p - 1)) r.degrade(Status::fail);
    } else if (mod(expected_q, p) == 1) {
        const bool residue_one = powmod(p, (expected_q - 1) / p, expected_q) == 1;
        r.witnesses["p_power_residue_is_one"] = residue_one;
        if (!best.at_least(2 * p - 1)) {
            r.degrade(Status::fail);
        } else if (!residue_one) {
            r.witnesses["case"] = "exactly 2p-1";
            if (!best.equals(2 * p - 1)) r.degrade(Status::fail);
        } else {
            r.witnesses["case"] = "at least 2p";
            if (!best.at_least(2 * p)) r.degrade(Status::monitored);
        }
    } else {
        r.witnesses["case"] = "at least 2p";
        if (!best.at_least(2 * p)) r.degrade(Status::fail);
    }

    if (g != nullptr) {
        const Projection proj = project_to_cyc(pow(*g, static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p)));
        if (!std::holds_alternative<CycInt>(proj)) {
            r.witnesses["stickelberger_identity"] = "g^(p^2) not in base ring";
            r.degrade(Status::fail);
        } else {
            const CycInt& G = std::get<CycInt>(proj);
            const CycInt AP = apply_multiplicative(A, P);
            bool matched = false;
            for (int t = 1; t < p && !matched; ++t) {
                const CycInt conj_t = galois(AP, GaloisIndex(t, p));
                for (int w = 0; w < p && !matched; ++w) {
                    const CycInt rhs = CycInt::zeta_power(p, w) * conj_t;
                    for (int sign : {1, -1}) {
                        if (G == (sign == 1 ? rhs : -rhs)) {
                            r.witnesses["stickelberger_identity"] = {{"sign", sign}, {"zeta_power", w}, {"conjugate_t", t}};
                            matched = true;
                            break;
                        }
                    }
                }
            }
            if (!matched) {
                r.witnesses["stickelberger_identity"] = "no match";
                r.degrade(Status::fail);
            }
        }
    }
    r.duration_ms = clock.elapsed_ms();
    return r;
}

}  // namespace stickel

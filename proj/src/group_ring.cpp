#include "stickel/group_ring.hpp"

#include "stickel/arith.hpp"
#include "stickel/padic.hpp"

namespace stickel {

GroupRingEl::GroupRingEl(int p, std::int64_t v, std::vector<mpz_class> coeffs)
    : p_(p), v_(mod(v, p)), c_(std::move(coeffs)) {
    if (p < 3 || !is_prime(static_cast<std::int64_t>(p))) {
        throw UsageError("group ring needs an odd prime p");
    }
    if (!is_primitive_root(v_, p)) {
        throw UsageError(std::to_string(v) + " is not a primitive root mod " + std::to_string(p));
    }
    if (c_.size() != static_cast<std::size_t>(p - 1)) {
        throw UsageError("group ring element needs p-1 coefficients");
    }
}

GroupRingEl GroupRingEl::zero(int p, std::int64_t v) {
    return GroupRingEl(p, v, std::vector<mpz_class>(static_cast<std::size_t>(p - 1)));
}

GroupRingEl GroupRingEl::sigma_power(int p, std::int64_t v, std::int64_t i, const mpz_class& c) {
    GroupRingEl r = zero(p, v);
    r.c_[static_cast<std::size_t>(mod(i, p - 1))] = c;
    return r;
}

GroupRingEl GroupRingEl::scalar(int p, std::int64_t v, const mpz_class& c) {
    return sigma_power(p, v, 0, c);
}

void GroupRingEl::check_compatible(const GroupRingEl& o) const {
    if (p_ != o.p_ || v_ != o.v_) throw UsageError("group ring elements over different (p, v)");
}

GroupRingEl& GroupRingEl::operator+=(const GroupRingEl& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

GroupRingEl& GroupRingEl::operator-=(const GroupRingEl& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

GroupRingEl& GroupRingEl::operator*=(const mpz_class& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

GroupRingEl operator*(const GroupRingEl& a, const GroupRingEl& b) {
    a.check_compatible(b);
    const std::size_t n = a.c_.size();
    std::vector<mpz_class> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.c_[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= n) k -= n;
            mpz_addmul(out[k].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return GroupRingEl(a.p_, a.v_, std::move(out));
}

mpz_class GroupRingEl::eval_mod(const mpz_class& X, const mpz_class& n) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * X + *it;
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), n.get_mpz_t());
    }
    return acc;
}

std::int64_t GroupRingEl::eval_mod(std::int64_t X, std::int64_t n) const {
    return eval_mod(mpz_class(static_cast<long>(X)), mpz_class(static_cast<long>(n))).get_si();
}

int GroupRingEl::degree() const {
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        if (c_[static_cast<std::size_t>(i)] != 0) return i;
    }
    return -1;
}

GroupRingEl build_P(int p, std::int64_t v) {
    std::vector<mpz_class> c(static_cast<std::size_t>(p - 1));
    for (int i = 0; i < p - 1; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<long>(lifted_power(v, -i, p));
    }
    return GroupRingEl(p, v, std::move(c));
}

std::int64_t delta(int p, std::int64_t v, int i) {
    if (i < 0 || i > p - 2) throw UsageError("delta index out of range");
    const std::int64_t num = lifted_power(v, -(i - 1), p) - lifted_power(v, -i, p) * mod(v, p);
    if (num % p != 0) throw InternalError("delta numerator not divisible by p");
    return num / p;
}

std::int64_t delta_floor(int p, std::int64_t v, int i) {
    return -((lifted_power(v, -i, p) * mod(v, p)) / p);
}

GroupRingEl build_Q(int p, std::int64_t v) {
    std::vector<mpz_class> c(static_cast<std::size_t>(p - 1));
    for (int i = 0; i < p - 1; ++i) c[static_cast<std::size_t>(i)] = static_cast<long>(delta(p, v, i));
    return GroupRingEl(p, v, std::move(c));
}

GroupRingEl build_Q1(int p, std::int64_t v) {
    const int half = (p - 1) / 2;
    GroupRingEl d = GroupRingEl::zero(p, v);
    for (int i = 0; i < half; ++i) d += GroupRingEl::sigma_power(p, v, i, static_cast<long>(delta(p, v, i)));
    const GroupRingEl one_minus_sigma =
        GroupRingEl::scalar(p, v, 1) - GroupRingEl::sigma_power(p, v, 1);
    return one_minus_sigma * d +
           GroupRingEl::sigma_power(p, v, half, mpz_class(static_cast<long>(1 - mod(v, p))));
}

std::vector<mpz_class> build_T_poly(int p, std::int64_t v) {
    std::vector<mpz_class> poly{mpz_class(static_cast<long>(lifted_power(v, -(p - 2), p)))};
    for (int k = 0; k < p - 1; ++k) {
        if (k == 1) continue;
        const mpz_class root = static_cast<long>(lifted_power(v, k, p));
        std::vector<mpz_class> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= root * poly[i];
        }
        poly = std::move(next);
    }
    return poly;
}

namespace {

int first_difference(const GroupRingEl& a, const GroupRingEl& b) {
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a[i] != b[i]) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace

CheckReport verify_PQ_identity(int p, std::int64_t v) {
    Stopwatch clock;
    CheckReport r;
    r.check = "pq_identity";
    r.params = {{"p", p}};
    r.convention = {{"v", v}};

    const GroupRingEl P = build_P(p, v);
    const GroupRingEl Q = build_Q(p, v);
    const GroupRingEl sigma = GroupRingEl::sigma_power(p, v, 1);
    const GroupRingEl one = GroupRingEl::scalar(p, v, 1);
    const mpz_class pz = p;

    const GroupRingEl lhs = P * (sigma - one * mpz_class(static_cast<long>(v)));
    const GroupRingEl rhs = Q * pz;
    const int diff = first_difference(lhs, rhs);
    r.witnesses["p_times_q"] = diff < 0 ? Json("equal") : Json{{"first_differing_index", diff}};
    if (diff >= 0) r.degrade(Status::fail);

    bool bounds = true;
    for (int i = 0; i < p - 1; ++i) {
        const std::int64_t d = delta(p, v, i);
        if (d > 0 || d <= -p || d != delta_floor(p, v, i)) bounds = false;
    }
    r.witnesses["delta_bounds"] = bounds;
    if (!bounds || delta(p, v, 0) != 0) r.degrade(Status::fail);

    const int half = (p - 1) / 2;
    GroupRingEl geometric = GroupRingEl::zero(p, v);
    for (int i = 0; i < half; ++i) geometric += GroupRingEl::sigma_power(p, v, i);
    const GroupRingEl Q1 = build_Q1(p, v);
    const int qdiff = first_difference(Q1 * geometric, Q);
    r.witnesses["q_factorization"] = qdiff < 0 ? Json("equal") : Json{{"first_differing_index", qdiff}};
    if (qdiff >= 0) r.degrade(Status::fail);

    const std::vector<mpz_class> T = build_T_poly(p, v);
    int bad_R = -1;
    for (int i = 0; i <= p - 2; ++i) {
        const mpz_class diffc = P[static_cast<std::size_t>(i)] - T[static_cast<std::size_t>(i)];
        const bool divisible = mpz_divisible_ui_p(diffc.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
        if (!divisible || (i == p - 2 && diffc != 0)) {
            bad_R = i;
            break;
        }
    }
    r.witnesses["p_minus_t_over_p"] = bad_R < 0 ? Json("integral, degree < p-2")
                                               : Json{{"first_bad_index", bad_R}};
    if (bad_R >= 0) r.degrade(Status::fail);

    const GroupRingEl lhs1 = lhs * (sigma - one);
    const GroupRingEl rhs1 = Q1 * pz * (GroupRingEl::sigma_power(p, v, half) - one);
    const int d1 = first_difference(lhs1, rhs1);
    r.witnesses["q1_identity"] = d1 < 0 ? Json("equal") : Json{{"first_differing_index", d1}};
    if (d1 >= 0) r.degrade(Status::fail);

    r.duration_ms = clock.elapsed_ms();
    return r;
}

GroupRingEl build_S2(int p, std::int64_t q, std::int64_t v) {
    if (mod(q, p) == 0) throw UsageError("q must be prime to p");
    const std::int64_t f = multiplicative_order(q, p);
    if (f == 1) throw UsageError("residue degree is 1; use build_P instead");
    const std::int64_t m = (p - 1) / f;
    std::vector<mpz_class> c(static_cast<std::size_t>(p - 1));
    for (std::int64_t i = 0; i < m; ++i) {
        std::int64_t s = 0;
        for (std::int64_t j = 0; j < f; ++j) s += lifted_power(v, -(i + j * m), p);
        if (s % p != 0) throw InternalError("S2 coefficient not integral");
        c[static_cast<std::size_t>(i)] = static_cast<long>(s / p);
    }
    return GroupRingEl(p, v, std::move(c));
}

CycInt apply_multiplicative(const CycInt& a, const GroupRingEl& theta, std::optional<std::int64_t> k) {
    if (a.p() != theta.p()) throw UsageError("apply_multiplicative: mismatched p");
    const int p = a.p();
    for (const auto& c : theta.coeffs()) {
        if (c < 0) throw UsageError("apply_multiplicative needs nonnegative coefficients");
    }
    mpz_class modulus;
    if (k) {
        mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(truncation_exponent(p, *k)));
    }
    CycInt result = CycInt::integer(p, 1);
    for (int i = 0; i < p - 1; ++i) {
        const mpz_class& e = theta[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        const CycInt conj_i = galois(a, GaloisIndex(lifted_power(theta.v(), i, p), p));
        if (k) {
            result = mul_mod(result, truncated_pow_mod(conj_i, e, *k), modulus);
        } else {
            if (!e.fits_ulong_p()) throw UsageError("exact exponent too large");
            result = result * pow(conj_i, e.get_ui());
        }
    }
    return result;
}

}  // namespace stickel

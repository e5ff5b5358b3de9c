#include "stickel/finite_field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "stickel/arith.hpp"

namespace stickel {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

void factor_into(mpz_class n, std::vector<mpz_class>& out) {
    for (unsigned long d = 2; d <= kTrialLimit && mpz_cmp_ui(n.get_mpz_t(), 1) > 0; ++d) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            out.emplace_back(d);
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        }
        if (mpz_cmp_ui(n.get_mpz_t(), d * d) < 0) break;
    }
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    throw UsageError("cannot factor " + n.get_str() + " by trial division");
}

// Roots of X^f + sum g_j X^j in F_q; used to discard reducible candidates early.
bool has_root(std::int64_t q, const std::vector<std::int64_t>& g) {
    for (std::int64_t x = 0; x < q; ++x) {
        std::int64_t acc = 1;
        for (auto it = g.rbegin(); it != g.rend(); ++it) acc = (acc * x + *it) % q;
        if (acc == 0) return true;
    }
    return false;
}

}  // namespace

std::vector<mpz_class> group_order_primes(std::int64_t q, int f) {
    std::map<int, mpz_class> phi;
    std::vector<mpz_class> primes;
    for (int d = 1; d <= f; ++d) {
        if (f % d != 0) continue;
        mpz_class value;
        mpz_ui_pow_ui(value.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(d));
        value -= 1;
        for (const auto& [e, pe] : phi) {
            if (d % e == 0) mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), pe.get_mpz_t());
        }
        phi[d] = value;
        factor_into(value, primes);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

std::vector<std::vector<std::int64_t>> null_space_mod(std::vector<std::vector<std::int64_t>> rows,
                                                      int ncols, std::int64_t q) {
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && mod(rows[piv][static_cast<std::size_t>(c)], q) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const std::int64_t inv = invmod(rows[r][static_cast<std::size_t>(c)], q);
        for (auto& x : rows[r]) x = mulmod(x, inv, q);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const std::int64_t factor = mod(rows[i][static_cast<std::size_t>(c)], q);
            if (factor == 0) continue;
            for (int j = 0; j < ncols; ++j) {
                auto& x = rows[i][static_cast<std::size_t>(j)];
                x = mod(x - factor * rows[r][static_cast<std::size_t>(j)], q);
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<std::int64_t>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
        std::vector<std::int64_t> v(static_cast<std::size_t>(ncols), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            v[static_cast<std::size_t>(pivot_col[i])] = mod(-rows[i][static_cast<std::size_t>(free)], q);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

FiniteField::FiniteField(std::int64_t q, int f, std::vector<std::int64_t> modulus)
    : q_(q), f_(f), g_(std::move(modulus)) {
    if (q < 2 || !is_prime(q)) throw UsageError("field characteristic must be prime");
    if (q >= (std::int64_t{1} << 24)) throw UsageError("field characteristic must be below 2^24");
    if (f < 1 || f > kMaxDegree || g_.size() != static_cast<std::size_t>(f)) {
        throw UsageError("modulus must list f low-order coefficients");
    }
    for (auto& c : g_) c = mod(c, q_);
    mpz_ui_pow_ui(order_.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(f));
    order_ -= 1;
    if (!x_is_primitive()) throw UsageError("X is not a generator modulo " + describe());

    trace_row_.assign(static_cast<std::size_t>(f), 0);
    Elem xj = one();
    for (int j = 0; j < f_; ++j) {
        Elem conj = xj;
        Elem sum = xj;
        for (int i = 1; i < f_; ++i) {
            conj = pow(conj, mpz_class(static_cast<long>(q_)));
            for (int k = 0; k < f_; ++k) {
                sum[static_cast<std::size_t>(k)] =
                    mod(sum[static_cast<std::size_t>(k)] + conj[static_cast<std::size_t>(k)], q_);
            }
        }
        for (int k = 1; k < f_; ++k) {
            if (sum[static_cast<std::size_t>(k)] != 0) throw InternalError("trace left the prime field");
        }
        trace_row_[static_cast<std::size_t>(j)] = sum[0];
        mul_x_inplace(xj);
    }
}

FiniteField::Elem FiniteField::one() const { return constant(1); }

FiniteField::Elem FiniteField::constant(std::int64_t c) const {
    Elem e = zero();
    e[0] = mod(c, q_);
    return e;
}

FiniteField::Elem FiniteField::x() const {
    Elem e = zero();
    if (f_ == 1) {
        e[0] = mod(-g_[0], q_);
    } else {
        e[1] = 1;
    }
    return e;
}

void FiniteField::mul_x_inplace(Elem& y) const {
    const std::int64_t carry = y[static_cast<std::size_t>(f_ - 1)];
    for (int j = f_ - 1; j > 0; --j) y[static_cast<std::size_t>(j)] = y[static_cast<std::size_t>(j - 1)];
    y[0] = 0;
    if (carry != 0) {
        for (int j = 0; j < f_; ++j) {
            auto& c = y[static_cast<std::size_t>(j)];
            c = mod(c - carry * g_[static_cast<std::size_t>(j)], q_);
        }
    }
}

FiniteField::Elem FiniteField::mul(const Elem& a, const Elem& b) const {
    // Coefficients stay below 2f q^2 < 2^63 (q < 2^24) until the final reduction.
    const auto F = static_cast<std::size_t>(f_);
    std::int64_t prod[2 * kMaxDegree - 1] = {};
    for (std::size_t i = 0; i < F; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < F; ++j) prod[i + j] += a[i] * b[j];
    }
    for (std::size_t top = 2 * F - 2; top >= F; --top) {
        const std::int64_t c = prod[top] % q_;
        if (c == 0) continue;
        // X^f = -sum g_j X^j
        for (std::size_t j = 0; j < F; ++j) prod[top - F + j] -= c * g_[j];
    }
    Elem out(F);
    for (std::size_t i = 0; i < F; ++i) out[i] = mod(prod[i], q_);
    return out;
}

FiniteField::Elem FiniteField::pow(const Elem& a, const mpz_class& e) const {
    Elem result = one();
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mul(result, result);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
    }
    return result;
}

bool FiniteField::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t FiniteField::trace(const Elem& a) const {
    std::int64_t t = 0;
    for (int j = 0; j < f_; ++j) t += a[static_cast<std::size_t>(j)] * trace_row_[static_cast<std::size_t>(j)];
    return mod(t, q_);
}

bool FiniteField::x_is_primitive() const {
    const Elem gen = x();
    if (is_zero(gen)) return false;
    if (pow(gen, order_) != one()) return false;
    thread_local std::map<std::pair<std::int64_t, int>, std::vector<mpz_class>> cache;
    auto it = cache.find({q_, f_});
    if (it == cache.end()) it = cache.emplace(std::make_pair(q_, f_), group_order_primes(q_, f_)).first;
    for (const mpz_class& ell : it->second) {
        const mpz_class e = order_ / ell;
        if (pow(gen, e) == one()) return false;
    }
    return true;
}

std::string FiniteField::describe() const {
    std::ostringstream os;
    os << "X^" << f_;
    for (int j = f_ - 1; j >= 0; --j) {
        const std::int64_t c = g_[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        os << '+';
        if (j == 0) {
            os << c;
        } else {
            if (c != 1) os << c << '*';
            os << 'X';
            if (j > 1) os << '^' << j;
        }
    }
    os << " over F_" << q_;
    return os.str();
}

FiniteField FiniteField::smallest_primitive(std::int64_t q, int f) {
    std::vector<std::int64_t> g(static_cast<std::size_t>(f), 0);
    while (true) {
        if (g[0] != 0 && (f == 1 || !has_root(q, g))) {
            try {
                return FiniteField(q, f, g);
            } catch (const UsageError&) {
            }
        }
        std::size_t i = 0;
        while (i < g.size() && ++g[i] == q) g[i++] = 0;
        if (i == g.size()) break;
    }
    throw InternalError("no primitive polynomial found");
}

}  // namespace stickel

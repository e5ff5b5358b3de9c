#include "stickel/cyclo_ring.hpp"

#include <sstream>

#include "stickel/arith.hpp"

namespace stickel {

namespace {

void require_prime_degree(int p) {
    if (p < 3 || !is_prime(static_cast<std::int64_t>(p))) {
        throw UsageError("cyclotomic modulus must be an odd prime, got " + std::to_string(p));
    }
}

void require_same(int a, int b, const char* what) {
    if (a != b) {
        throw UsageError(std::string("mismatched ") + what + ": " + std::to_string(a) +
                         " vs " + std::to_string(b));
    }
}

// Fold exponent p-1 back onto the basis: zeta^{p-1} = -(1 + ... + zeta^{p-2}).
void fold_top(std::vector<mpz_class>& r, int p) {
    const mpz_class top = r[static_cast<std::size_t>(p - 1)];
    if (top != 0) {
        for (int j = 0; j < p - 1; ++j) r[static_cast<std::size_t>(j)] -= top;
    }
    r.pop_back();
}

struct Term {
    int j;
    int k;
    mpz_srcptr value;
};

std::vector<Term> nonzero_terms(const BiCycInt& a) {
    std::vector<Term> out;
    for (int k = 0; k < a.q() - 1; ++k) {
        for (int j = 0; j < a.p() - 1; ++j) {
            const mpz_class& c = a.at(j, k);
            if (c != 0) out.push_back({j, k, c.get_mpz_t()});
        }
    }
    return out;
}

}  // namespace

GaloisIndex::GaloisIndex(std::int64_t t, std::int64_t modulus)
    : t_(mod(t, modulus)), modulus_(modulus) {
    if (modulus < 2 || gcd(t_, modulus) != 1) {
        throw UsageError("Galois index " + std::to_string(t) + " is not a unit modulo " +
                         std::to_string(modulus));
    }
}

GaloisIndex GaloisIndex::compose(const GaloisIndex& other) const {
    require_same(static_cast<int>(modulus_), static_cast<int>(other.modulus_), "Galois moduli");
    return GaloisIndex(mulmod(t_, other.t_, modulus_), modulus_);
}

GaloisIndex GaloisIndex::inverse() const { return GaloisIndex(invmod(t_, modulus_), modulus_); }

// ---------------------------------------------------------------- CycInt

CycInt::CycInt(int p) : p_(p), c_(static_cast<std::size_t>(p - 1)) { require_prime_degree(p); }

CycInt::CycInt(int p, std::vector<mpz_class> coeffs) : p_(p), c_(std::move(coeffs)) {
    require_prime_degree(p);
    if (c_.size() != static_cast<std::size_t>(p - 1)) {
        throw UsageError("CycInt needs exactly p-1 coefficients");
    }
}

CycInt CycInt::integer(int p, const mpz_class& n) {
    CycInt r(p);
    r.c_[0] = n;
    return r;
}

CycInt CycInt::zeta_power(int p, std::int64_t k) {
    std::vector<mpz_class> red(static_cast<std::size_t>(p));
    red[static_cast<std::size_t>(mod(k, p))] = 1;
    return from_redundant(p, std::move(red));
}

CycInt CycInt::lambda(int p) { return zeta_power(p, 1) - integer(p, 1); }

CycInt CycInt::from_redundant(int p, std::vector<mpz_class> redundant) {
    if (redundant.size() != static_cast<std::size_t>(p)) {
        throw UsageError("redundant vector must have length p");
    }
    fold_top(redundant, p);
    return CycInt(p, std::move(redundant));
}

bool CycInt::is_zero() const {
    for (const auto& c : c_) {
        if (c != 0) return false;
    }
    return true;
}

bool CycInt::is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j) {
        if (c_[j] != 0) return false;
    }
    return true;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    require_same(p_, o.p_, "p");
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    require_same(p_, o.p_, "p");
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
    return *this;
}

CycInt& CycInt::operator*=(const mpz_class& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    require_same(a.p_, b.p_, "p");
    const int p = a.p_;
    std::vector<mpz_class> red(static_cast<std::size_t>(p));
    for (int i = 0; i < p - 1; ++i) {
        const mpz_class& ai = a.c_[static_cast<std::size_t>(i)];
        if (ai == 0) continue;
        for (int j = 0; j < p - 1; ++j) {
            const mpz_class& bj = b.c_[static_cast<std::size_t>(j)];
            if (bj == 0) continue;
            int e = i + j;
            if (e >= p) e -= p;
            mpz_addmul(red[static_cast<std::size_t>(e)].get_mpz_t(), ai.get_mpz_t(),
                       bj.get_mpz_t());
        }
    }
    return CycInt::from_redundant(p, std::move(red));
}

std::string CycInt::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (j) os << ',';
        os << c_[j].get_str();
    }
    os << ']';
    return os.str();
}

CycInt pow(const CycInt& a, std::uint64_t e) {
    CycInt result = CycInt::integer(a.p(), 1);
    CycInt base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

CycInt galois(const CycInt& a, const GaloisIndex& t) {
    const int p = a.p();
    require_same(p, static_cast<int>(t.modulus()), "Galois modulus");
    std::vector<mpz_class> red(static_cast<std::size_t>(p));
    for (int j = 0; j < p - 1; ++j) {
        red[static_cast<std::size_t>(mulmod(j, t.t(), p))] = a[static_cast<std::size_t>(j)];
    }
    return CycInt::from_redundant(p, std::move(red));
}

CycInt conj(const CycInt& a) { return galois(a, GaloisIndex(a.p() - 1, a.p())); }

mpz_class norm(const CycInt& a) {
    CycInt prod = a;
    for (int t = 2; t < a.p(); ++t) prod = prod * galois(a, GaloisIndex(t, a.p()));
    if (!prod.is_rational()) {
        throw InternalError("norm: conjugate product is not rational " + prod.to_string());
    }
    return prod[0];
}

std::optional<CycInt> exact_div(const CycInt& a, const CycInt& b) {
    require_same(a.p(), b.p(), "p");
    if (b.is_zero()) throw UsageError("exact_div by zero");
    const int p = a.p();
    CycInt others = CycInt::integer(p, 1);
    for (int t = 2; t < p; ++t) others = others * galois(b, GaloisIndex(t, p));
    const CycInt full = others * b;
    if (!full.is_rational()) throw InternalError("exact_div: norm not rational");
    const mpz_class n = full[0];
    CycInt numerator = a * others;
    std::vector<mpz_class> q(static_cast<std::size_t>(p - 1));
    for (int j = 0; j < p - 1; ++j) {
        const mpz_class& c = numerator[static_cast<std::size_t>(j)];
        if (!mpz_divisible_p(c.get_mpz_t(), n.get_mpz_t())) return std::nullopt;
        mpz_divexact(q[static_cast<std::size_t>(j)].get_mpz_t(), c.get_mpz_t(), n.get_mpz_t());
    }
    return CycInt(p, std::move(q));
}

CycInt reduce_mod(const CycInt& a, const mpz_class& modulus) {
    std::vector<mpz_class> c = a.coeffs();
    for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    return CycInt(a.p(), std::move(c));
}

CycInt mul_mod(const CycInt& a, const CycInt& b, const mpz_class& modulus) {
    return reduce_mod(a * b, modulus);
}

// -------------------------------------------------------------- BiCycInt

BiCycInt::BiCycInt(int p, int q)
    : p_(p), q_(q), c_(static_cast<std::size_t>(p - 1) * static_cast<std::size_t>(q - 1)) {
    require_prime_degree(p);
    require_prime_degree(q);
    if (p == q) throw UsageError("BiCycInt needs distinct primes");
}

BiCycInt BiCycInt::embed(const CycInt& a, int q) {
    BiCycInt r(a.p(), q);
    for (int j = 0; j < a.p() - 1; ++j) r.c_[r.idx(j, 0)] = a[static_cast<std::size_t>(j)];
    return r;
}

BiCycInt BiCycInt::monomial(int p, int q, std::int64_t j, std::int64_t k,
                            const mpz_class& coefficient) {
    std::vector<mpz_class> grid(static_cast<std::size_t>(p) * static_cast<std::size_t>(q));
    grid[static_cast<std::size_t>(mod(k, q) * p + mod(j, p))] = coefficient;
    return from_redundant(p, q, std::move(grid));
}

BiCycInt BiCycInt::from_redundant(int p, int q, std::vector<mpz_class> grid) {
    if (grid.size() != static_cast<std::size_t>(p) * static_cast<std::size_t>(q)) {
        throw UsageError("redundant grid must have p*q entries");
    }
    BiCycInt r(p, q);
    const auto P = static_cast<std::size_t>(p);
    // zeta_q^{q-1} = -(1 + ... + zeta_q^{q-2}) on every zeta_p exponent.
    for (std::size_t j = 0; j < P; ++j) {
        const mpz_class top = grid[static_cast<std::size_t>(q - 1) * P + j];
        if (top == 0) continue;
        for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(q); ++k) grid[k * P + j] -= top;
    }
    for (int k = 0; k < q - 1; ++k) {
        const std::size_t base = static_cast<std::size_t>(k) * P;
        const mpz_class top = grid[base + P - 1];
        for (int j = 0; j < p - 1; ++j) {
            mpz_class& dst = r.c_[r.idx(j, k)];
            dst = grid[base + static_cast<std::size_t>(j)];
            if (top != 0) dst -= top;
        }
    }
    return r;
}

CycInt BiCycInt::column(int k) const {
    if (k < 0 || k >= q_ - 1) throw UsageError("column index out of range");
    std::vector<mpz_class> c(c_.begin() + static_cast<std::ptrdiff_t>(idx(0, k)),
                             c_.begin() + static_cast<std::ptrdiff_t>(idx(0, k) + (p_ - 1)));
    return CycInt(p_, std::move(c));
}

BiCycInt BiCycInt::from_columns(int q, std::span<const CycInt> columns) {
    if (columns.size() != static_cast<std::size_t>(q - 1)) {
        throw UsageError("from_columns needs q-1 columns");
    }
    BiCycInt r(columns.front().p(), q);
    for (int k = 0; k < q - 1; ++k) {
        const CycInt& col = columns[static_cast<std::size_t>(k)];
        require_same(col.p(), r.p_, "p");
        for (int j = 0; j < r.p_ - 1; ++j) r.c_[r.idx(j, k)] = col[static_cast<std::size_t>(j)];
    }
    return r;
}

bool BiCycInt::is_zero() const {
    for (const auto& c : c_) {
        if (c != 0) return false;
    }
    return true;
}

BiCycInt& BiCycInt::operator+=(const BiCycInt& o) {
    require_same(p_, o.p_, "p");
    require_same(q_, o.q_, "q");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

BiCycInt& BiCycInt::operator-=(const BiCycInt& o) {
    require_same(p_, o.p_, "p");
    require_same(q_, o.q_, "q");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

BiCycInt& BiCycInt::operator*=(const mpz_class& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

BiCycInt operator*(const BiCycInt& a, const BiCycInt& b) {
    require_same(a.p_, b.p_, "p");
    require_same(a.q_, b.q_, "q");
    const int p = a.p_;
    const int q = a.q_;
    std::vector<mpz_class> grid(static_cast<std::size_t>(p) * static_cast<std::size_t>(q));
    const auto ta = nonzero_terms(a);
    const auto tb = nonzero_terms(b);
    for (const Term& x : ta) {
        for (const Term& y : tb) {
            int j = x.j + y.j;
            if (j >= p) j -= p;
            int k = x.k + y.k;
            if (k >= q) k -= q;
            mpz_addmul(grid[static_cast<std::size_t>(k * p + j)].get_mpz_t(), x.value, y.value);
        }
    }
    return BiCycInt::from_redundant(p, q, std::move(grid));
}

BiCycInt operator*(const CycInt& a, const BiCycInt& b) {
    require_same(a.p(), b.p_, "p");
    std::vector<CycInt> cols;
    cols.reserve(static_cast<std::size_t>(b.q_ - 1));
    for (int k = 0; k < b.q_ - 1; ++k) cols.push_back(a * b.column(k));
    return BiCycInt::from_columns(b.q_, cols);
}

BiCycInt pow(const BiCycInt& a, std::uint64_t e) {
    BiCycInt result = BiCycInt::embed(CycInt::integer(a.p(), 1), a.q());
    BiCycInt base = a;
    bool first = true;
    while (e > 0) {
        if (e & 1) {
            result = first ? base : result * base;
            first = false;
        }
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

BiCycInt galois_p(const BiCycInt& a, const GaloisIndex& t) {
    require_same(a.p(), static_cast<int>(t.modulus()), "Galois modulus");
    std::vector<CycInt> cols;
    for (int k = 0; k < a.q() - 1; ++k) cols.push_back(galois(a.column(k), t));
    return BiCycInt::from_columns(a.q(), cols);
}

BiCycInt galois_q(const BiCycInt& a, const GaloisIndex& m) {
    const int p = a.p();
    const int q = a.q();
    require_same(q, static_cast<int>(m.modulus()), "Galois modulus");
    std::vector<mpz_class> grid(static_cast<std::size_t>(p) * static_cast<std::size_t>(q));
    for (int k = 0; k < q - 1; ++k) {
        const auto k2 = static_cast<std::size_t>(mulmod(k, m.t(), q));
        for (int j = 0; j < p - 1; ++j) {
            grid[k2 * static_cast<std::size_t>(p) + static_cast<std::size_t>(j)] = a.at(j, k);
        }
    }
    return BiCycInt::from_redundant(p, q, std::move(grid));
}

BiCycInt conj_p(const BiCycInt& a) { return galois_p(a, GaloisIndex(a.p() - 1, a.p())); }

BiCycInt conj(const BiCycInt& a) { return galois_q(conj_p(a), GaloisIndex(a.q() - 1, a.q())); }

Projection project_to_cyc(const BiCycInt& x) {
    for (int k = 1; k < x.q() - 1; ++k) {
        for (int j = 0; j < x.p() - 1; ++j) {
            if (x.at(j, k) != 0) return NotInBaseRing{k};
        }
    }
    return x.column(0);
}

}  // namespace stickel

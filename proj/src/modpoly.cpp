#include "stickel/modpoly.hpp"

#include <algorithm>
#include <sstream>

#include "stickel/arith.hpp"

namespace stickel {

namespace {

void reduce(mpz_class& x, const mpz_class& n) { mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t()); }

mpz_class inverse(const mpz_class& a, const mpz_class& n) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0) {
        throw UsageError("coefficient " + a.get_str() + " not invertible mod " + n.get_str());
    }
    return r;
}

void same_ring(const ModPoly& a, const ModPoly& b) {
    if (a.modulus() != b.modulus()) throw UsageError("polynomials over different moduli");
}

constexpr unsigned long kBruteForceRoots = 5000;

}  // namespace

ModPoly::ModPoly(mpz_class modulus) : n_(std::move(modulus)) {
    if (n_ < 2) throw UsageError("polynomial modulus must be at least 2");
}

ModPoly::ModPoly(mpz_class modulus, std::vector<mpz_class> coeffs) : n_(std::move(modulus)), c_(std::move(coeffs)) {
    if (n_ < 2) throw UsageError("polynomial modulus must be at least 2");
    for (auto& c : c_) reduce(c, n_);
    normalize();
}

void ModPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::x_power(const mpz_class& modulus, std::size_t k) {
    std::vector<mpz_class> c(k + 1);
    c[k] = 1;
    return ModPoly(modulus, std::move(c));
}

ModPoly ModPoly::constant(const mpz_class& modulus, const mpz_class& c) { return ModPoly(modulus, {c}); }

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    return *this * inverse(leading(), n_);
}

mpz_class ModPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
        reduce(acc, n_);
    }
    return acc;
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    same_ring(a, b);
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return ModPoly(a.n_, std::move(c));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    same_ring(a, b);
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return ModPoly(a.n_, std::move(c));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return ModPoly(a.n_);
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return ModPoly(a.n_, std::move(c));
}

ModPoly operator*(const ModPoly& a, const mpz_class& s) {
    std::vector<mpz_class> c = a.c_;
    for (auto& x : c) x *= s;
    return ModPoly(a.n_, std::move(c));
}

std::string ModPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c != 1 || i == 0) os << c.get_str();
        if (i > 0) os << (c != 1 ? "*X" : "X");
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
    same_ring(a, b);
    if (b.is_zero()) throw UsageError("polynomial division by zero");
    const mpz_class& n = a.modulus();
    if (a.degree() < b.degree()) return {ModPoly(n), a};
    std::vector<mpz_class> r = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<mpz_class> q(r.size() - db);
    const mpz_class lead_inv = inverse(b.leading(), n);
    for (std::size_t top = r.size(); top-- > db;) {
        mpz_class c = r[top] * lead_inv;
        reduce(c, n);
        if (c == 0) continue;
        q[top - db] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(r[top - db + j].get_mpz_t(), c.get_mpz_t(), b.coeffs()[j].get_mpz_t());
            reduce(r[top - db + j], n);
        }
    }
    r.resize(db);
    return {ModPoly(n, std::move(q)), ModPoly(n, std::move(r))};
}

ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

ModPoly gcd(ModPoly a, ModPoly b) {
    same_ring(a, b);
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& m) {
    if (e < 0) throw UsageError("negative polynomial exponent");
    ModPoly result = ModPoly::constant(m.modulus(), 1) % m;
    const ModPoly b = base % m;
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
    }
    return result;
}

namespace {

void split_linear(const ModPoly& g, gmp_randclass& rng, std::vector<mpz_class>& out) {
    if (g.degree() <= 0) return;
    const mpz_class& n = g.modulus();
    if (g.degree() == 1) {
        mpz_class r = -g.coeff(0) * inverse(g.leading(), n);
        reduce(r, n);
        out.push_back(r);
        return;
    }
    const mpz_class half = (n - 1) / 2;
    const ModPoly one = ModPoly::constant(n, 1);
    while (true) {
        const mpz_class a = rng.get_z_range(n);
        const ModPoly shifted(n, {a, mpz_class(1)});
        const ModPoly h = gcd(powmod(shifted, half, g) - one, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            split_linear(h, rng, out);
            split_linear(divmod(g, h).first, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<mpz_class> roots(const ModPoly& f) {
    if (f.is_zero()) throw UsageError("every residue is a root of the zero polynomial");
    const mpz_class& n = f.modulus();
    std::vector<mpz_class> out;
    if (n <= kBruteForceRoots) {
        for (unsigned long x = 0; x < n.get_ui(); ++x) {
            if (f.eval(x) == 0) out.emplace_back(x);
        }
        return out;
    }
    if (!is_prime(n)) throw UsageError("root extraction needs a prime modulus");
    const ModPoly X = ModPoly::x_power(n, 1);
    const ModPoly split = gcd(powmod(X, n, f) - X, f);
    if (split.degree() <= 0) return out;
    if (split.eval(0) == 0) {
        out.emplace_back(0);
    }
    // Strip the root 0 so the quadratic-character splitting applies.
    ModPoly rest = split;
    if (rest.eval(0) == 0) rest = divmod(rest, X).first;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20240611UL);
    split_linear(rest, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace stickel

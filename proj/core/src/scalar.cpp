#include "gwa/scalar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gwa {

namespace {

using Dense = std::vector<Rational>;

int degree_of(const Dense& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

// Quotient of a by the monic polynomial b; remainder must vanish.
Dense divide_exact_monic(Dense a, const Dense& b) {
    int db = degree_of(b);
    int da = degree_of(a);
    Dense q(da - db + 1, Rational(0));
    for (int i = da; i >= db; --i) {
        if (a[i] == 0) continue;
        Rational c = a[i];
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return q;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(std::int64_t n) {
    static std::map<std::int64_t, Dense> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    if (n < 1) throw InvalidArgumentError("cyclotomic polynomial index must be >= 1");
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d, built from smaller
    // indices already in the cache.
    std::function<const Dense&(std::int64_t)> get = [&](std::int64_t m) -> const Dense& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        Dense num(static_cast<std::size_t>(m) + 1, Rational(0));
        num[0] = -1;
        num[static_cast<std::size_t>(m)] = 1;
        for (std::int64_t d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            num = divide_exact_monic(std::move(num), get(d));
        }
        return cache.emplace(m, std::move(num)).first->second;
    };
    return get(n);
}

Scalar Scalar::from_rational(Rational r) {
    r.canonicalize();  // raw mpq_class construction does not reduce p/q
    return Scalar(1, Dense{std::move(r)});
}

Scalar Scalar::reduce(std::int64_t conductor, Dense dense) {
    const Dense& phi = cyclotomic_polynomial(conductor);
    std::size_t deg_phi = phi.size() - 1;
    for (std::size_t i = dense.size(); i-- > deg_phi;) {
        if (dense[i] == 0) continue;
        Rational c = dense[i];
        dense[i] = 0;
        for (std::size_t j = 0; j < deg_phi; ++j) dense[i - deg_phi + j] -= c * phi[j];
    }
    dense.resize(deg_phi, Rational(0));
    return Scalar(conductor, std::move(dense));
}

Scalar Scalar::root_of_unity(std::int64_t n, std::int64_t j) {
    if (n < 1) throw InvalidArgumentError("conductor must be >= 1");
    j %= n;
    if (j < 0) j += n;
    Dense dense(static_cast<std::size_t>(j) + 1, Rational(0));
    dense[static_cast<std::size_t>(j)] = 1;
    return reduce(n, std::move(dense));
}

bool Scalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Scalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool Scalar::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

Rational Scalar::rational_value() const {
    if (!is_rational()) throw InvalidArgumentError("scalar is not rational: " + str());
    return coeffs_[0];
}

Scalar Scalar::promoted(std::int64_t m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0)
        throw InvalidArgumentError("cannot promote conductor " + std::to_string(conductor_) +
                                   " to non-multiple " + std::to_string(m));
    std::int64_t stride = m / conductor_;
    Dense dense(static_cast<std::size_t>(coeffs_.size() - 1) * stride + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) dense[i * stride] = coeffs_[i];
    return reduce(m, std::move(dense));
}

std::optional<Scalar> Scalar::try_demote(std::int64_t d) const {
    if (conductor_ % d != 0) return std::nullopt;
    if (d == conductor_) return *this;
    // Columns are the images of zeta_d^i in the conductor-N basis; solve
    // the exact linear system column-combination = this value.
    std::size_t cols = cyclotomic_polynomial(d).size() - 1;
    std::size_t rows = coeffs_.size();
    std::vector<Dense> mat(rows, Dense(cols + 1, Rational(0)));
    for (std::size_t i = 0; i < cols; ++i) {
        Scalar img = Scalar::root_of_unity(d, static_cast<std::int64_t>(i)).promoted(conductor_);
        for (std::size_t r = 0; r < rows; ++r) mat[r][i] = img.coeffs()[r];
    }
    for (std::size_t r = 0; r < rows; ++r) mat[r][cols] = coeffs_[r];

    std::vector<std::int64_t> pivot_col_of_row(rows, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && mat[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(mat[p], mat[rank]);
        Rational inv = Rational(1) / mat[rank][c];
        for (auto& v : mat[rank]) v *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || mat[r][c] == 0) continue;
            Rational f = mat[r][c];
            for (std::size_t k = c; k <= cols; ++k) mat[r][k] -= f * mat[rank][k];
        }
        pivot_col_of_row[rank] = static_cast<std::int64_t>(c);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (mat[r][cols] != 0) return std::nullopt;  // not in the subfield

    Dense sol(cols, Rational(0));
    for (std::size_t r = 0; r < rank; ++r)
        sol[static_cast<std::size_t>(pivot_col_of_row[r])] = mat[r][cols];
    return Scalar(d, std::move(sol));
}

Scalar Scalar::simplified() const {
    if (conductor_ != 1 && is_rational()) return from_rational(coeffs_[0]);
    return *this;
}

Scalar Scalar::operator-() const {
    Dense dense = coeffs_;
    for (auto& c : dense) c = -c;
    return Scalar(conductor_, std::move(dense));
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    std::int64_t m = std::lcm(conductor_, rhs.conductor_);
    Scalar a = promoted(m), b = rhs.promoted(m);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
    std::int64_t m = std::lcm(conductor_, rhs.conductor_);
    Scalar a = promoted(m), b = rhs.promoted(m);
    Dense prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return reduce(m, std::move(prod));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError("scalar division by zero");
    if (is_rational()) return from_rational(Rational(1) / coeffs_[0]);

    // Extended Euclid in Q[z] against Phi_N; Phi_N is irreducible over Q,
    // so the gcd is a nonzero constant.
    Dense r0 = cyclotomic_polynomial(conductor_);
    Dense r1 = coeffs_;
    Dense s0{Rational(0)}, s1{Rational(1)};
    while (degree_of(r1) >= 0) {
        int d1 = degree_of(r1);
        Rational lead_inv = Rational(1) / r1[static_cast<std::size_t>(d1)];
        Dense q(static_cast<std::size_t>(std::max(degree_of(r0) - d1 + 1, 1)), Rational(0));
        Dense rem = r0;
        for (int i = degree_of(rem); i >= d1; --i) {
            if (rem[static_cast<std::size_t>(i)] == 0) continue;
            Rational c = rem[static_cast<std::size_t>(i)] * lead_inv;
            q[static_cast<std::size_t>(i - d1)] = c;
            for (int j = 0; j <= d1; ++j)
                rem[static_cast<std::size_t>(i - d1 + j)] -= c * r1[static_cast<std::size_t>(j)];
        }
        // s_next = s0 - q * s1
        Dense s_next(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s_next[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s_next[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s_next);
    }
    if (degree_of(r0) != 0)
        throw Error("cyclotomic inversion failed: gcd with Phi_N not constant");
    Rational g_inv = Rational(1) / r0[0];
    for (auto& c : s0) c *= g_inv;
    return reduce(conductor_, std::move(s0));
}

Scalar Scalar::pow(std::int64_t e) const {
    if (e == 0) return one();
    Scalar base = e < 0 ? inverse() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    Scalar acc = one();
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::optional<std::int64_t> Scalar::root_of_unity_order() const {
    if (is_zero()) return std::nullopt;
    // The root-of-unity group of Q(zeta_N) is {+-zeta_N^j}, cyclic of
    // order lcm(2, N); any root of unity here has order dividing that.
    std::int64_t m = std::lcm<std::int64_t>(2, conductor_);
    if (!pow(m).is_one()) return std::nullopt;
    for (std::int64_t e = 1; e <= m; ++e)
        if (m % e == 0 && pow(e).is_one()) return e;
    return std::nullopt;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (conductor_ == rhs.conductor_) return coeffs_ == rhs.coeffs_;
    std::int64_t m = std::lcm(conductor_, rhs.conductor_);
    return promoted(m).coeffs_ == rhs.promoted(m).coeffs_;
}

int scalar_compare(const Scalar& a, const Scalar& b) {
    std::int64_t m = std::lcm(a.conductor(), b.conductor());
    Scalar pa = a.promoted(m), pb = b.promoted(m);
    const Dense& ca = pa.coeffs();
    const Dense& cb = pb.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        int c = cmp(ca[i], cb[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Scalar::str() const {
    Scalar s = simplified();
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
        const Rational& c = s.coeffs_[i];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "z" << s.conductor_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string to_string(const Scalar& s) { return s.str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace gwa

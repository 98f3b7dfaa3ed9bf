#include "maxcurves/field.hpp"

#include <algorithm>
#include <set>

#include "maxcurves/numeric.hpp"

namespace maxcurves {

namespace {

constexpr std::uint64_t kCardinalityLimit = 1ull << 40;
constexpr std::uint64_t kDlogLimit = 1ull << 26;

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

// Dense polynomials over Z/p (ascending coefficients, trailing zeros trimmed;
// empty vector is the zero polynomial).  Only used for modulus discovery.
using Poly = std::vector<std::uint32_t>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t av = i < a.size() ? a[i] : 0;
        std::uint64_t bv = i < b.size() ? b[i] : 0;
        out[i] = static_cast<std::uint32_t>((av + p - bv) % p);
    }
    poly_trim(out);
    return out;
}

Poly poly_rem(Poly a, const Poly& f, std::uint64_t p) {
    const std::size_t df = f.size() - 1;
    std::uint64_t lead_inv = inv_mod(f.back(), p);
    while (a.size() > df) {
        std::uint64_t c = a.back() % p;
        if (c != 0) {
            std::uint64_t scale = c * lead_inv % p;
            std::size_t shift = a.size() - f.size();
            for (std::size_t i = 0; i < f.size(); ++i) {
                a[shift + i] = static_cast<std::uint32_t>(
                    (a[shift + i] + p * p - scale * f[i] % p) % p);
            }
        }
        a.pop_back();
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> buf(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            buf[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
        }
    }
    Poly prod(buf.size());
    for (std::size_t i = 0; i < buf.size(); ++i) prod[i] = static_cast<std::uint32_t>(buf[i] % p);
    poly_trim(prod);
    return poly_rem(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly result = {1};
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    while (!b.empty()) {
        Poly r = poly_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin test: f (monic, degree D) is irreducible iff x^(p^D) = x mod f and
// gcd(x^(p^(D/r)) - x, f) is constant for every prime r | D.
bool is_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t D = f.size() - 1;
    std::set<std::size_t> subfield_degrees;
    for (const auto& [r, mult] : factorize(static_cast<std::uint64_t>(D))) {
        subfield_degrees.insert(D / r);
    }
    const Poly x = {0, 1};
    Poly cur = x;
    for (std::size_t j = 1; j <= D; ++j) {
        cur = poly_powmod(std::move(cur), p, f, p);
        if (subfield_degrees.count(j)) {
            Poly g = poly_gcd(poly_sub(cur, x, p), f, p);
            if (g.size() != 1) return false;
        }
    }
    return cur == x;
}

// Advance a coefficient vector to its lexicographic successor, where the
// constant term is the most significant position.
bool next_vector(std::vector<std::uint32_t>& c, std::uint64_t p) {
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        if (++*it < p) return true;
        *it = 0;
    }
    return false;
}

}  // namespace

bool FieldElem::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

bool lex_less(const FieldElem& a, const FieldElem& b) {
    return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                        b.coeffs.end());
}

FieldTower::FieldTower(std::uint64_t p, std::uint32_t h, std::uint32_t n)
    : p_(p), h_(h), n_(n) {
    if (!is_prime(p)) throw Error(Errc::NonPrime, "characteristic must be prime");
    if (h < 1) throw Error(Errc::BadParameter, "h must be positive");
    if (n < 3 || n % 2 == 0) throw Error(Errc::EvenOrSmallN, "n must be odd and at least 3");

    q_ = checked_pow(p, h);
    degree_ = 2 * n * h;
    cardinality_ = checked_pow(p, degree_);
    if (cardinality_ > kCardinalityLimit) {
        throw Error(Errc::TowerTooLarge, "field cardinality exceeds the supported range");
    }

    // Lex-smallest monic irreducible modulus of degree 2nh.
    std::vector<std::uint32_t> low(degree_, 0);
    bool found = false;
    do {
        if (low[0] == 0) continue;  // divisible by x
        Poly f(low.begin(), low.end());
        f.push_back(1);
        if (is_irreducible(f, p_)) {
            modulus_ = low;
            found = true;
            break;
        }
    } while (next_vector(low, p_));
    if (!found) throw Error(Errc::BadParameter, "no irreducible modulus found");

    // x^k mod f for k in [degree, 2*degree-2].
    std::vector<std::uint32_t> red(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) {
        red[i] = static_cast<std::uint32_t>((p_ - modulus_[i]) % p_);
    }
    reduction_.push_back(red);
    for (std::uint32_t k = degree_ + 1; k <= 2 * degree_ - 2; ++k) {
        std::vector<std::uint32_t> next(degree_, 0);
        const auto& prev = reduction_.back();
        std::uint64_t top = prev[degree_ - 1];
        for (std::uint32_t i = degree_ - 1; i > 0; --i) next[i] = prev[i - 1];
        next[0] = 0;
        if (top != 0) {
            for (std::uint32_t i = 0; i < degree_; ++i) {
                next[i] = static_cast<std::uint32_t>((next[i] + top * reduction_[0][i]) % p_);
            }
        }
        reduction_.push_back(next);
    }

    // Lex-smallest generator of the multiplicative group.
    auto factors = factorize(cardinality_ - 1);
    for (std::uint64_t k = 1; k < cardinality_; ++k) {
        FieldElem candidate = element_at(k);
        bool full_order = true;
        for (const auto& [r, mult] : factors) {
            if (pow(candidate, (cardinality_ - 1) / r) == one()) {
                full_order = false;
                break;
            }
        }
        if (full_order) {
            primitive_ = candidate;
            break;
        }
    }

    trace_system_ = build_additive_system(AdditiveKind::TraceToQ);
    frob_system_ = build_additive_system(AdditiveKind::FrobeniusMinusIdentityQ2);
}

FieldElem FieldTower::zero() const {
    return FieldElem{std::vector<std::uint32_t>(degree_, 0)};
}

FieldElem FieldTower::one() const {
    FieldElem e = zero();
    e.coeffs[0] = 1;
    return e;
}

FieldElem FieldTower::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() != degree_) {
        throw Error(Errc::InvalidElement, "coefficient vector has wrong length");
    }
    for (std::uint32_t c : coeffs) {
        if (c >= p_) throw Error(Errc::InvalidElement, "coefficient out of range");
    }
    return FieldElem{coeffs};
}

FieldElem FieldTower::element_at(std::uint64_t index) const {
    if (index >= cardinality_) throw Error(Errc::BadParameter, "element index out of range");
    FieldElem e = zero();
    for (std::uint32_t i = degree_; i-- > 0;) {
        e.coeffs[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return e;
}

std::uint64_t FieldTower::index_of(const FieldElem& e) const {
    std::uint64_t index = 0;
    for (std::uint32_t i = 0; i < degree_; ++i) index = index * p_ + e.coeffs[i];
    return index;
}

std::uint64_t FieldTower::pack(const FieldElem& e) const {
    std::uint64_t code = 0;
    for (std::uint32_t i = degree_; i-- > 0;) code = code * p_ + e.coeffs[i];
    return code;
}

FieldElem FieldTower::unpack(std::uint64_t code) const {
    FieldElem e = zero();
    for (std::uint32_t i = 0; i < degree_; ++i) {
        e.coeffs[i] = static_cast<std::uint32_t>(code % p_);
        code /= p_;
    }
    return e;
}

FieldElem FieldTower::add(const FieldElem& a, const FieldElem& b) const {
    FieldElem out = zero();
    for (std::uint32_t i = 0; i < degree_; ++i) {
        out.coeffs[i] = static_cast<std::uint32_t>((a.coeffs[i] + b.coeffs[i]) % p_);
    }
    return out;
}

FieldElem FieldTower::sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem out = zero();
    for (std::uint32_t i = 0; i < degree_; ++i) {
        out.coeffs[i] = static_cast<std::uint32_t>((a.coeffs[i] + p_ - b.coeffs[i]) % p_);
    }
    return out;
}

FieldElem FieldTower::neg(const FieldElem& a) const {
    FieldElem out = zero();
    for (std::uint32_t i = 0; i < degree_; ++i) {
        out.coeffs[i] = static_cast<std::uint32_t>((p_ - a.coeffs[i]) % p_);
    }
    return out;
}

FieldElem FieldTower::reduce_product(std::vector<std::uint64_t>& buffer) const {
    for (std::uint32_t k = 2 * degree_ - 2; k >= degree_; --k) {
        std::uint64_t c = buffer[k] % p_;
        if (c != 0) {
            const auto& red = reduction_[k - degree_];
            for (std::uint32_t i = 0; i < degree_; ++i) buffer[i] += c * red[i];
        }
        buffer[k] = 0;
    }
    FieldElem out = zero();
    for (std::uint32_t i = 0; i < degree_; ++i) {
        out.coeffs[i] = static_cast<std::uint32_t>(buffer[i] % p_);
    }
    return out;
}

FieldElem FieldTower::mul(const FieldElem& a, const FieldElem& b) const {
    std::vector<std::uint64_t> buffer(2 * degree_ - 1, 0);
    for (std::uint32_t i = 0; i < degree_; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::uint32_t j = 0; j < degree_; ++j) {
            buffer[i + j] += static_cast<std::uint64_t>(a.coeffs[i]) * b.coeffs[j];
        }
    }
    return reduce_product(buffer);
}

FieldElem FieldTower::inv(const FieldElem& a) const {
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "zero has no multiplicative inverse");
    return pow(a, cardinality_ - 2);
}

FieldElem FieldTower::pow(const FieldElem& base, std::uint64_t exponent) const {
    if (exponent == 0) return one();
    if (base.is_zero()) return zero();
    FieldElem result = one();
    FieldElem sq = base;
    while (exponent) {
        if (exponent & 1) result = mul(result, sq);
        exponent >>= 1;
        if (exponent) sq = mul(sq, sq);
    }
    return result;
}

FieldElem FieldTower::pow(const FieldElem& base, const Bigint& exponent) const {
    if (base.is_zero()) {
        if (exponent == 0) return one();
        if (exponent < 0) throw Error(Errc::DivisionByZero, "negative power of zero");
        return zero();
    }
    Bigint group_order = cardinality_ - 1;
    Bigint reduced = exponent % group_order;
    if (reduced < 0) reduced += group_order;
    return pow(base, reduced.convert_to<std::uint64_t>());
}

FieldElem FieldTower::frobenius(const FieldElem& e, std::uint32_t k) const {
    FieldElem out = e;
    for (std::uint32_t i = 0; i < k % degree_; ++i) out = pow(out, p_);
    return out;
}

bool FieldTower::in_subfield(const FieldElem& e, std::uint64_t s) const {
    std::uint64_t v = s;
    std::uint32_t j = 0;
    while (v > 1 && v % p_ == 0) {
        v /= p_;
        ++j;
    }
    if (s < 2 || v != 1 || j == 0 || degree_ % j != 0) {
        throw Error(Errc::BadSubfieldOrder, "order is not that of a subfield of the tower");
    }
    return pow(e, s) == e;
}

std::vector<FieldElem> FieldTower::enumerate_subfield(std::uint64_t s) const {
    in_subfield(zero(), s);  // validates s
    std::vector<FieldElem> elems;
    elems.reserve(s);
    elems.push_back(zero());
    FieldElem gen = pow(primitive_, (cardinality_ - 1) / (s - 1));
    FieldElem cur = one();
    for (std::uint64_t i = 0; i + 1 < s; ++i) {
        elems.push_back(cur);
        cur = mul(cur, gen);
    }
    return elems;
}

FieldElem FieldTower::trace_subfield(const FieldElem& e) const {
    if (!in_subfield(e, q_ * q_)) {
        throw Error(Errc::NotInQuadraticSubfield, "trace argument must lie in the quadratic subfield");
    }
    return add(frobenius(e, h_), e);
}

FieldTower::AdditiveSystem FieldTower::build_additive_system(AdditiveKind kind) const {
    const std::uint32_t D = degree_;
    std::vector<std::vector<std::uint32_t>> R(D, std::vector<std::uint32_t>(D, 0));
    for (std::uint32_t j = 0; j < D; ++j) {
        FieldElem basis = zero();
        basis.coeffs[j] = 1;
        FieldElem image = kind == AdditiveKind::TraceToQ
                              ? add(frobenius(basis, h_), basis)
                              : sub(frobenius(basis, 2 * h_), basis);
        for (std::uint32_t i = 0; i < D; ++i) R[i][j] = image.coeffs[i];
    }

    AdditiveSystem sys;
    sys.transform.assign(D, std::vector<std::uint32_t>(D, 0));
    for (std::uint32_t i = 0; i < D; ++i) sys.transform[i][i] = 1;
    sys.pivot_col.assign(D, -1);

    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < D && rank < D; ++col) {
        std::uint32_t sel = rank;
        while (sel < D && R[sel][col] == 0) ++sel;
        if (sel == D) continue;
        std::swap(R[sel], R[rank]);
        std::swap(sys.transform[sel], sys.transform[rank]);
        std::uint64_t scale = inv_mod(R[rank][col], p_);
        for (std::uint32_t j = 0; j < D; ++j) {
            R[rank][j] = static_cast<std::uint32_t>(R[rank][j] * scale % p_);
            sys.transform[rank][j] =
                static_cast<std::uint32_t>(sys.transform[rank][j] * scale % p_);
        }
        for (std::uint32_t r = 0; r < D; ++r) {
            if (r == rank || R[r][col] == 0) continue;
            std::uint64_t factor = R[r][col];
            for (std::uint32_t j = 0; j < D; ++j) {
                R[r][j] = static_cast<std::uint32_t>(
                    (R[r][j] + (p_ - factor % p_) * R[rank][j]) % p_);
                sys.transform[r][j] = static_cast<std::uint32_t>(
                    (sys.transform[r][j] + (p_ - factor % p_) * sys.transform[rank][j]) % p_);
            }
        }
        sys.pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    sys.rref = std::move(R);

    std::vector<bool> is_pivot(D, false);
    for (std::uint32_t r = 0; r < rank; ++r) is_pivot[sys.pivot_col[r]] = true;
    for (std::uint32_t col = 0; col < D; ++col) {
        if (is_pivot[col]) continue;
        FieldElem v = zero();
        v.coeffs[col] = 1;
        for (std::uint32_t r = 0; r < rank; ++r) {
            std::uint32_t val = sys.rref[r][col];
            if (val != 0) {
                v.coeffs[sys.pivot_col[r]] = static_cast<std::uint32_t>((p_ - val) % p_);
            }
        }
        sys.kernel.push_back(v);
    }
    return sys;
}

const FieldTower::AdditiveSystem& FieldTower::additive_system(AdditiveKind kind) const {
    return kind == AdditiveKind::TraceToQ ? trace_system_ : frob_system_;
}

std::vector<FieldElem> FieldTower::solve_additive(AdditiveKind kind, const FieldElem& rhs) const {
    const AdditiveSystem& sys = additive_system(kind);
    const std::uint32_t D = degree_;

    std::vector<std::uint32_t> tc(D, 0);
    for (std::uint32_t r = 0; r < D; ++r) {
        std::uint64_t acc = 0;
        for (std::uint32_t j = 0; j < D; ++j) {
            acc += static_cast<std::uint64_t>(sys.transform[r][j]) * rhs.coeffs[j];
        }
        tc[r] = static_cast<std::uint32_t>(acc % p_);
    }
    for (std::uint32_t r = 0; r < D; ++r) {
        if (sys.pivot_col[r] < 0 && tc[r] != 0) return {};
    }

    FieldElem particular = zero();
    for (std::uint32_t r = 0; r < D; ++r) {
        if (sys.pivot_col[r] >= 0) particular.coeffs[sys.pivot_col[r]] = tc[r];
    }

    std::vector<FieldElem> solutions;
    std::vector<std::uint32_t> digits(sys.kernel.size(), 0);
    while (true) {
        FieldElem sol = particular;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (digits[i] == 0) continue;
            for (std::uint32_t j = 0; j < D; ++j) {
                sol.coeffs[j] = static_cast<std::uint32_t>(
                    (sol.coeffs[j] + static_cast<std::uint64_t>(digits[i]) * sys.kernel[i].coeffs[j]) %
                    p_);
            }
        }
        solutions.push_back(std::move(sol));
        if (!next_vector(digits, p_)) break;
    }
    std::sort(solutions.begin(), solutions.end(), lex_less);
    return solutions;
}

std::uint64_t FieldTower::additive_solution_count(AdditiveKind kind, const FieldElem& rhs) const {
    const AdditiveSystem& sys = additive_system(kind);
    for (std::uint32_t r = 0; r < degree_; ++r) {
        if (sys.pivot_col[r] >= 0) continue;
        std::uint64_t acc = 0;
        for (std::uint32_t j = 0; j < degree_; ++j) {
            acc += static_cast<std::uint64_t>(sys.transform[r][j]) * rhs.coeffs[j];
        }
        if (acc % p_ != 0) return 0;
    }
    return checked_pow(p_, sys.kernel.size());
}

void FieldTower::ensure_dlog_table() const {
    std::call_once(dlog_once_, [this] {
        if (cardinality_ > kDlogLimit) {
            throw Error(Errc::BudgetExceeded, "field too large for a discrete-log table");
        }
        dlog_.assign(cardinality_, 0xFFFFFFFFu);
        FieldElem acc = one();
        for (std::uint64_t i = 0; i + 1 < cardinality_; ++i) {
            dlog_[pack(acc)] = static_cast<std::uint32_t>(i);
            acc = mul(acc, primitive_);
        }
    });
}

std::uint64_t FieldTower::discrete_log(const FieldElem& e) const {
    if (e.is_zero()) throw Error(Errc::DivisionByZero, "zero has no discrete log");
    ensure_dlog_table();
    return dlog_[pack(e)];
}

std::vector<FieldElem> FieldTower::solve_kummer(std::uint64_t m, const FieldElem& c) const {
    if (m < 1 || (cardinality_ - 1) % m != 0) {
        throw Error(Errc::BadExponent, "exponent must divide the multiplicative group order");
    }
    if (c.is_zero()) return {zero()};
    std::uint64_t cofactor = (cardinality_ - 1) / m;
    if (pow(c, cofactor) != one()) return {};

    std::uint64_t log_c = discrete_log(c);
    FieldElem root = pow(primitive_, log_c / m);
    FieldElem step = pow(primitive_, cofactor);
    std::vector<FieldElem> solutions;
    solutions.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        solutions.push_back(root);
        root = mul(root, step);
    }
    std::sort(solutions.begin(), solutions.end(), lex_less);
    return solutions;
}

std::uint64_t FieldTower::kummer_solution_count(std::uint64_t m, const FieldElem& c) const {
    if (m < 1 || (cardinality_ - 1) % m != 0) {
        throw Error(Errc::BadExponent, "exponent must divide the multiplicative group order");
    }
    if (c.is_zero()) return 1;
    return pow(c, (cardinality_ - 1) / m) == one() ? m : 0;
}

FieldElem FieldTower::root_of_unity(std::uint64_t k) const {
    if (k < 1 || (cardinality_ - 1) % k != 0) {
        throw Error(Errc::BadOrder, "order must divide the multiplicative group order");
    }
    return pow(primitive_, (cardinality_ - 1) / k);
}

}  // namespace maxcurves

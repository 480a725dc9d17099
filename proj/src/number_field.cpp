#include "hpisot/number_field.hpp"

#include <sstream>

#include "hpisot/error.hpp"

namespace hpisot {

SturmSequence::SturmSequence(const IntPolynomial& p) {
    seq_.emplace_back(p);
    seq_.push_back(seq_.back().derivative());
    while (!seq_.back().is_zero()) {
        auto r = seq_[seq_.size() - 2].divmod(seq_.back()).second;
        if (r.is_zero()) break;
        seq_.push_back(Rational(-1) * r);
    }
}

int SturmSequence::variations(const Rational& x) const {
    int changes = 0, last = 0;
    for (const auto& s : seq_) {
        int sg = sgn(s.eval(x));
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

Rational cauchy_root_bound(const IntPolynomial& p) {
    Rational m = 0;
    const Integer lead = abs(p.leading());
    for (int i = 0; i < p.degree(); ++i) {
        Rational r(abs(p.coeff(i)), lead);
        r.canonicalize();
        if (r > m) m = r;
    }
    return 1 + m;
}

std::pair<Rational, Rational> largest_real_root_interval(const IntPolynomial& p, const Rational& floor,
                                                         unsigned bits) {
    SturmSequence sturm(p);
    Rational lo = floor, hi = cauchy_root_bound(p);
    if (hi <= lo) hi = lo + 1;
    if (sturm.count(lo, hi) == 0) throw PreconditionError("no real root of " + p.to_string() + " above the floor");
    Rational width;
    mpq_div_2exp(width.get_mpq_t(), Rational(1).get_mpq_t(), bits);
    // Invariant: the largest real root lies in (lo, hi].
    while (hi - lo > width || sturm.count(lo, hi) > 1) {
        Rational mid = (lo + hi) / 2;
        if (sturm.count(mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

// ---------------------------------------------------------------------------

NumberField::NumberField(IntPolynomial p, Rational lo, Rational hi)
    : p_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {}

std::shared_ptr<const NumberField> NumberField::create(IntPolynomial min_poly, Rational lo, Rational hi) {
    if (!min_poly.is_monic() || min_poly.degree() < 1)
        throw PreconditionError("number field needs a monic polynomial of positive degree");
    if (lo < 0 || hi < lo) throw PreconditionError("number field interval must satisfy 0 <= lo <= hi");
    if (min_poly.degree() == 1) {
        Rational root(-min_poly.coeff(0));
        lo = hi = root;
    } else {
        Rational plo = min_poly.eval(lo), phi = min_poly.eval(hi);
        if (!(phi == 0 || sgn(plo) * sgn(phi) < 0) || SturmSequence(min_poly).count(lo, hi) != 1)
            throw PreconditionError("interval does not isolate a root of " + min_poly.to_string());
    }
    return std::shared_ptr<const NumberField>(new NumberField(std::move(min_poly), std::move(lo), std::move(hi)));
}

std::pair<Rational, Rational> NumberField::interval(unsigned bits) const {
    std::lock_guard lock(mutex_);
    if (lo_ == hi_) return {lo_, hi_};
    Rational width;
    mpq_div_2exp(width.get_mpq_t(), Rational(1).get_mpq_t(), bits);
    const int s_hi = sgn(p_.eval(hi_));
    if (s_hi == 0) return {hi_, hi_};
    while (hi_ - lo_ > width) {
        Rational mid = (lo_ + hi_) / 2;
        int s = sgn(p_.eval(mid));
        if (s == 0) {
            lo_ = hi_ = mid;
            break;
        }
        if (s == s_hi)
            hi_ = mid;
        else
            lo_ = mid;
    }
    return {lo_, hi_};
}

double NumberField::approx() const {
    auto [lo, hi] = interval(64);
    return Rational((lo + hi) / 2).get_d();
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, const Rational& value) : field_(std::move(field)) {
    c_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
    c_[0] = value;
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)), c_(std::move(coords)) {
    if (c_.size() != static_cast<std::size_t>(field_->degree()))
        throw std::invalid_argument("field element needs exactly d coordinates");
    for (auto& q : c_) q.canonicalize();
}

FieldElement FieldElement::lambda(const FieldPtr& field) {
    return from_polynomial(field, RatPolynomial(std::vector<Rational>{0, 1}));
}

FieldElement FieldElement::from_polynomial(const FieldPtr& field, const RatPolynomial& poly) {
    const int d = field->degree();
    std::vector<Rational> c = poly.coeffs();
    const auto& m = field->min_poly().coeffs();
    for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
        Rational t = c[static_cast<std::size_t>(i)];
        if (t == 0) continue;
        for (int j = 0; j <= d; ++j) c[static_cast<std::size_t>(i - d + j)] -= t * Rational(m[static_cast<std::size_t>(j)]);
    }
    c.resize(static_cast<std::size_t>(d), Rational(0));
    return FieldElement(field, std::move(c));
}

bool FieldElement::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

void FieldElement::check_same(const FieldElement& b) const {
    if (!field_ || !b.field_) throw std::invalid_argument("field element without a field");
    if (field_ != b.field_ && field_->min_poly() != b.field_->min_poly())
        throw std::invalid_argument("field elements from different fields");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    FieldElement r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    FieldElement r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

FieldElement operator-(const FieldElement& a) {
    FieldElement r = a;
    for (auto& v : r.c_) v = -v;
    return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return FieldElement::from_polynomial(a.field_, a.as_polynomial() * b.as_polynomial());
}

FieldElement operator*(const Rational& s, const FieldElement& a) {
    FieldElement r = a;
    for (auto& v : r.c_) v *= s;
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(lambda)");
    auto eg = extended_gcd(as_polynomial(), RatPolynomial(field_->min_poly()));
    if (eg.g.degree() != 0) throw InternalError("minimal polynomial is not irreducible");
    return from_polynomial(field_, eg.s);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return a.c_ == b.c_;
}

std::pair<Rational, Rational> FieldElement::enclose(unsigned bits) const {
    auto [lo, hi] = field_->interval(bits);
    // Positive and negative parts are each increasing on lo >= 0.
    Rational pos_lo = 0, pos_hi = 0, neg_lo = 0, neg_hi = 0, plo = 1, phi = 1;
    for (const auto& c : c_) {
        if (c > 0) {
            pos_lo += c * plo;
            pos_hi += c * phi;
        } else if (c < 0) {
            neg_lo -= c * plo;
            neg_hi -= c * phi;
        }
        plo *= lo;
        phi *= hi;
    }
    return {pos_lo - neg_hi, pos_hi - neg_lo};
}

int FieldElement::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sgn(c_[0]);
    for (unsigned bits = 64; bits <= (1U << 16); bits *= 2) {
        auto [lo, hi] = enclose(bits);
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    throw PrecisionError("sign of " + to_string() + " undecided at 65536 bits");
}

double FieldElement::to_double() const {
    auto [lo, hi] = enclose(80);
    return Rational((lo + hi) / 2).get_d();
}

std::string FieldElement::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& v = c_[i];
        if (v == 0) continue;
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << '-';
        Rational mag = abs(v);
        if (i == 0 || mag != 1) os << mag.get_str() << (i ? "*" : "");
        if (i >= 1) os << var;
        if (i > 1) os << '^' << i;
        first = false;
    }
    return first ? "0" : os.str();
}

FieldElement p_prime_at_lambda(const FieldPtr& field) {
    return FieldElement::from_polynomial(field, RatPolynomial(field->min_poly().derivative()));
}

bool in_Z_one_over_a0(const Rational& q, const Integer& a0) {
    if (a0 == 0) throw std::invalid_argument("a0 must be nonzero");
    Integer den = q.get_den();
    Integer g;
    const Integer a = abs(a0);
    for (;;) {
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
    return den == 1;
}

}  // namespace hpisot

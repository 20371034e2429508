#include "lchain/spheres.hpp"

#include <sstream>
#include <stdexcept>

namespace lchain {

SphereLClass::SphereLClass(Flavor f, int degree, Int value)
    : flavor_(f), degree_(degree), value_(std::move(value)) {
    const std::string g = group();
    if (g == "0") {
        if (value_ != 0)
            throw std::invalid_argument("l-class: nonzero value in a trivial group");
    } else if (g == "Z/2") {
        value_ = ((value_ % 2) + 2) % 2;
    }
}

SphereLClass SphereLClass::operator+(const SphereLClass& other) const {
    if (flavor_ != other.flavor_ || degree_ != other.degree_)
        throw std::invalid_argument("l-class: sum across different groups");
    return {flavor_, degree_, value_ + other.value_};
}

SphereLClass SphereLClass::operator-() const {
    return {flavor_, degree_, -value_};
}

std::string SphereLClass::to_string() const {
    std::ostringstream os;
    os << value_ << " in " << group();
    return os.str();
}

SphereLClass lproduct(const SphereLClass& a, const SphereLClass& b) {
    if (a.flavor() != Flavor::quadratic || b.flavor() != Flavor::quadratic)
        throw std::invalid_argument("lproduct: expects quadratic classes");
    const int n = a.degree() + b.degree();
    if (a.degree() % 4 == 0 && b.degree() % 4 == 0)
        return {Flavor::quadratic, n, a.value() * b.value()};
    return {Flavor::quadratic, n, 0};
}

namespace {
// validates the simply-connectedness hypothesis before any slot is built
SphereLClass slot(int p, int q, int degree, Int v) {
    if (p < 2 || q < 2)
        throw std::invalid_argument("sphere factors must have dimension at least two");
    return {Flavor::quadratic, degree, std::move(v)};
}
} // namespace

TElem::TElem(int p, int q, Int x, Int y, Int z)
    : p_(p), q_(q),
      x_(slot(p, q, p, std::move(x))),
      y_(slot(p, q, q, std::move(y))),
      z_(slot(p, q, p + q, std::move(z))) {}

TElem TElem::zero(int p, int q) { return {p, q, 0, 0, 0}; }

std::string TElem::to_string() const {
    std::ostringstream os;
    os << "(" << x_.value() << ", " << y_.value() << ", " << z_.value() << ")";
    return os.str();
}

SElem::SElem(int p, int q, Int x, Int y)
    : p_(p), q_(q),
      x_(slot(p, q, p, std::move(x))),
      y_(slot(p, q, q, std::move(y))) {}

SElem SElem::zero(int p, int q) { return {p, q, 0, 0}; }

std::string SElem::to_string() const {
    std::ostringstream os;
    os << "(" << x_.value() << ", " << y_.value() << ")";
    return os.str();
}

namespace {
void check_match(int p, int q, int p2, int q2) {
    if (p != p2 || q != q2)
        throw std::invalid_argument("sphere dimensions do not match");
}
} // namespace

TElem add(const TElem& t, const TElem& u) {
    check_match(t.p(), t.q(), u.p(), u.q());
    return {t.p(), t.q(), (t.x() + u.x()).value(), (t.y() + u.y()).value(),
            (t.z() + u.z()).value()};
}

TElem negated(const TElem& t) {
    return {t.p(), t.q(), (-t.x()).value(), (-t.y()).value(), (-t.z()).value()};
}

TElem pairing(const TElem& t, const TElem& u) {
    check_match(t.p(), t.q(), u.p(), u.q());
    const SphereLClass cross = lproduct(t.x(), u.y()) + lproduct(u.x(), t.y());
    return {t.p(), t.q(), 0, 0, cross.value()};
}

TElem whitney(const TElem& t, const TElem& u) {
    return add(add(t, u), pairing(t, u));
}

TElem whitney_inverse(const TElem& t) {
    const SphereLClass twice = lproduct(t.x(), t.y()) + lproduct(t.x(), t.y());
    return {t.p(), t.q(), (-t.x()).value(), (-t.y()).value(),
            (twice + -t.z()).value()};
}

SphereLClass assembly(const TElem& t) { return t.z(); }

TElem eta(const SElem& s) {
    return {s.p(), s.q(), s.x().value(), s.y().value(), 0};
}

SElem compose_structures(const SElem& s_f, const SElem& s_g_pushed) {
    check_match(s_f.p(), s_f.q(), s_g_pushed.p(), s_g_pushed.q());
    return {s_f.p(), s_f.q(), (s_f.x() + s_g_pushed.x()).value(),
            (s_f.y() + s_g_pushed.y()).value()};
}

TElem inverse_pullback_invariant(const SElem& s_f, const SElem& s_g_pushed) {
    check_match(s_f.p(), s_f.q(), s_g_pushed.p(), s_g_pushed.q());
    const SphereLClass cross =
        lproduct(s_f.x(), s_g_pushed.y()) + lproduct(s_g_pushed.x(), s_f.y());
    return {s_f.p(), s_f.q(), s_g_pushed.x().value(), s_g_pushed.y().value(),
            (-cross).value()};
}

ReconcileReport reconcile_check(const SElem& s_f, const SElem& s_g_pushed) {
    ReconcileReport r{add(eta(s_f), eta(s_g_pushed)),
                      whitney(eta(s_f), inverse_pullback_invariant(s_f, s_g_pushed)),
                      false};
    r.ok = r.lhs == r.rhs;
    return r;
}

std::pair<SphereLClass, SphereLClass> nonadditivity_demo(const Int& x, const Int& y) {
    const SElem s_f(4, 4, x, y);
    const SElem s_g(4, 4, -x, -y); // the structure inverse, pushed forward
    const TElem t = eta(s_f);
    const TElem t2 = inverse_pullback_invariant(s_f, s_g);
    return {assembly(whitney(t, t2)), assembly(t) + assembly(t2)};
}

ObstructionDecomposition composite_obstruction_demo(const Int& x, const Int& y) {
    const SElem s_f(4, 4, x, y);
    const SElem s_g(4, 4, -x, -y);
    const TElem t = eta(s_f);
    const TElem t2 = inverse_pullback_invariant(s_f, s_g);
    return {assembly(t), assembly(t2), assembly(pairing(t, t2)),
            assembly(whitney(t, t2))};
}

} // namespace lchain

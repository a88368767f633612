#include "quatkit/poly.hpp"

#include <algorithm>
#include <optional>

namespace quatkit::expr {

std::string MultiIndex::to_string() const {
    std::string out;
    for (int v = 0; v < 4; ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += "q" + std::to_string(v);
        if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
    return out;
}

CanonicalPoly CanonicalPoly::constant(const Quaternion& c) {
    CanonicalPoly p(c.mode());
    p.add_term(MultiIndex{}, c);
    return p;
}

void CanonicalPoly::add_term(const MultiIndex& index, const Quaternion& coefficient) {
    if (coefficient.mode() != mode_)
        throw ModeMismatchError("polynomial coefficient mode mismatch");
    if (coefficient.is_zero()) return;
    auto it = terms_.find(index);
    if (it == terms_.end()) {
        terms_.emplace(index, coefficient);
        return;
    }
    const Quaternion sum = add(it->second, coefficient);
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

CanonicalPoly CanonicalPoly::operator+(const CanonicalPoly& o) const {
    if (mode_ != o.mode_) throw ModeMismatchError("polynomial addition across modes");
    CanonicalPoly out = *this;
    for (const auto& [index, coeff] : o.terms_) out.add_term(index, coeff);
    return out;
}

CanonicalPoly CanonicalPoly::operator-() const {
    CanonicalPoly out(mode_);
    for (const auto& [index, coeff] : terms_) out.terms_.emplace(index, negate(coeff));
    return out;
}

CanonicalPoly CanonicalPoly::operator*(const CanonicalPoly& o) const {
    if (mode_ != o.mode_) throw ModeMismatchError("polynomial multiplication across modes");
    CanonicalPoly out(mode_);
    for (const auto& [ia, ca] : terms_) {
        for (const auto& [ib, cb] : o.terms_) {
            MultiIndex index;
            for (int v = 0; v < 4; ++v) {
                const unsigned sum = static_cast<unsigned>(ia.e[v]) + ib.e[v];
                if (sum > kPolyExponentCap)
                    throw ExponentOverflowError("monomial exponent exceeds cap " +
                                                std::to_string(kPolyExponentCap));
                index.e[v] = static_cast<std::uint8_t>(sum);
            }
            // Real monomials are central; only the coefficients keep order.
            out.add_term(index, mul_components(ca, cb));
        }
    }
    return out;
}

bool CanonicalPoly::operator==(const CanonicalPoly& o) const {
    if (mode_ != o.mode_ || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [index, coeff] : terms_) {
        if (!(it->first == index) || it->second != coeff) return false;
        ++it;
    }
    return true;
}

CanonicalPoly CanonicalPoly::conjugated() const {
    CanonicalPoly out(mode_);
    for (const auto& [index, coeff] : terms_) out.terms_.emplace(index, conjugate(coeff));
    return out;
}

std::string CanonicalPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Reverse map order puts q0-dominant monomials first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const std::string mono = it->first.to_string();
        const Quaternion& c = it->second;
        const bool real_coeff = c.x().is_zero() && c.y().is_zero() && c.z().is_zero();
        std::string body;
        bool neg = false;
        if (real_coeff) {
            std::string mag = c.w().to_string();
            if (mag[0] == '-') {
                neg = true;
                mag = mag.substr(1);
            }
            if (mono.empty())
                body = mag;
            else if (mag == "1")
                body = mono;
            else
                body = mag + "*" + mono;
        } else {
            const std::string cs = c.to_string();
            const bool composite = cs.find_first_of("+-", 1) != std::string::npos;
            const std::string wrapped = composite ? "(" + cs + ")" : cs;
            body = mono.empty() ? wrapped : wrapped + "*" + mono;
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

namespace {

/// Scalar mode of an expression, inferred from its constants.
void infer_mode(const ExprPtr& e, std::optional<Mode>& found) {
    if (e->kind == Expr::Kind::Const || e->kind == Expr::Kind::Series) {
        for (const Quaternion& v : e->values) {
            if (found && *found != v.mode())
                throw ModeMismatchError("expression mixes scalar modes");
            found = v.mode();
        }
    }
    for (const auto& child : e->children) infer_mode(child, found);
}

CanonicalPoly var_poly(Mode mode) {
    CanonicalPoly p(mode);
    for (int t = 0; t < 4; ++t) {
        MultiIndex index;
        index.e[t] = 1;
        p.add_term(index, Quaternion::unit(t, mode));
    }
    return p;
}

CanonicalPoly pow_poly(const CanonicalPoly& base, unsigned exponent, Mode mode) {
    CanonicalPoly acc = CanonicalPoly::constant(Quaternion::one(mode));
    CanonicalPoly sq = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) acc = acc * sq;
        e >>= 1u;
        if (e > 0) sq = sq * sq;
    }
    return acc;
}

} // namespace

CanonicalPoly expand(const ExprPtr& e, Mode mode) {
    switch (e->kind) {
        case Expr::Kind::Const: {
            if (e->values.front().mode() != mode)
                throw ModeMismatchError("constant mode differs from expansion mode");
            return CanonicalPoly::constant(e->values.front());
        }
        case Expr::Kind::VarQ:
            return var_poly(mode);
        case Expr::Kind::Component: {
            CanonicalPoly p(mode);
            MultiIndex index;
            index.e[e->component] = 1;
            p.add_term(index, Quaternion::one(mode));
            return p;
        }
        case Expr::Kind::Conj:
            return expand(e->children[0], mode).conjugated();
        case Expr::Kind::Neg:
            return -expand(e->children[0], mode);
        case Expr::Kind::Sum:
            return expand(e->children[0], mode) + expand(e->children[1], mode);
        case Expr::Kind::Prod: {
            CanonicalPoly acc = expand(e->children[0], mode);
            for (std::size_t f = 1; f < e->children.size(); ++f)
                acc = acc * expand(e->children[f], mode);
            return acc;
        }
        case Expr::Kind::Pow:
            return pow_poly(expand(e->children[0], mode), e->exponent, mode);
        case Expr::Kind::Series: {
            CanonicalPoly acc(mode);
            if (e->values.empty()) return acc;
            const CanonicalPoly q = var_poly(mode);
            CanonicalPoly power = CanonicalPoly::constant(Quaternion::one(mode));
            const std::size_t last = std::min<std::size_t>(e->exponent, e->values.size() - 1);
            for (std::size_t n = 0; n <= last; ++n) {
                // Coefficients stay on the left of the powers.
                acc = acc + CanonicalPoly::constant(e->values[n]) * power;
                if (n < last) power = power * q;
            }
            return acc;
        }
        case Expr::Kind::Ident:
            throw Error("internal: identifier survived parsing");
    }
    throw Error("internal: unknown expression kind");
}

CanonicalPoly expand(const ExprPtr& e) {
    std::optional<Mode> found;
    infer_mode(e, found);
    return expand(e, found.value_or(Mode::ExactRational));
}

Quaternion eval_poly(const CanonicalPoly& p, const Quaternion& q) {
    if (p.mode() != q.mode())
        throw ModeMismatchError("polynomial and point have different scalar modes");
    Quaternion out = Quaternion::zero(q.mode());
    for (const auto& [index, coeff] : p.terms()) {
        Scalar mono = Scalar::one(q.mode());
        for (int v = 0; v < 4; ++v)
            for (unsigned rep = 0; rep < index.e[v]; ++rep) mono = mono * q.component(v);
        out = add(out, scalar_mul(mono, coeff));
    }
    return out;
}

CanonicalPoly derivative(const CanonicalPoly& p, int var) {
    if (var < 0 || var > 3) throw InvalidArgumentError("derivative variable out of range");
    CanonicalPoly out(p.mode());
    for (const auto& [index, coeff] : p.terms()) {
        if (index.e[var] == 0) continue;
        MultiIndex lowered = index;
        lowered.e[var] -= 1;
        const Scalar exponent = p.mode() == Mode::ExactRational
                                    ? Scalar::rational(index.e[var])
                                    : Scalar::float64(index.e[var]);
        out.add_term(lowered, scalar_mul(exponent, coeff));
    }
    return out;
}

} // namespace quatkit::expr

#include "quatkit/sympoly.hpp"

#include "quatkit/errors.hpp"

namespace quatkit::structure {

SymPoly SymPoly::constant(Rational c) {
    SymPoly p;
    p.add_term({0, 0, 0}, c);
    return p;
}

SymPoly SymPoly::variable(int index) {
    if (index < 0 || index >= kVars) throw InvalidArgumentError("symbolic variable index");
    SymPoly p;
    Exponents e{0, 0, 0};
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

void SymPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    SymPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

SymPoly SymPoly::operator-() const {
    SymPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + (-o); }

SymPoly SymPoly::operator*(const SymPoly& o) const {
    SymPoly out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

bool SymPoly::provably_positive() const {
    const auto constant_it = terms_.find({0, 0, 0});
    if (constant_it == terms_.end() || constant_it->second.sign() <= 0) return false;
    for (const auto& [e, c] : terms_) {
        if (c.sign() <= 0) return false;
        for (unsigned exp : e)
            if (exp % 2 != 0) return false;
    }
    return true;
}

std::string SymPoly::to_string() const {
    static const char* names[kVars] = {"alpha", "beta", "gamma"};
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mag = c.to_string();
        bool neg = false;
        if (mag[0] == '-') {
            neg = true;
            mag = mag.substr(1);
        }
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string vars;
        for (int v = 0; v < kVars; ++v) {
            if (e[v] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[v];
            if (e[v] > 1) vars += "^" + std::to_string(e[v]);
        }
        if (vars.empty()) {
            out += mag;
        } else if (mag == "1") {
            out += vars;
        } else {
            out += mag + "*" + vars;
        }
    }
    return out;
}

} // namespace quatkit::structure

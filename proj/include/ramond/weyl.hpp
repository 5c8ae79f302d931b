#pragma once

// Weyl-superalgebra generators acting on the carrier families.

#include <vector>

#include "ramond/carrier.hpp"

namespace ramond {

struct WeylGen {
    enum class Kind { Tpow, Dt, DDt, Xi, DXi };
    Kind kind = Kind::Tpow;
    int m = 0;  // exponent for Tpow

    static WeylGen tpow(int m) { return {Kind::Tpow, m}; }
    static WeylGen dt() { return {Kind::Dt, 0}; }
    static WeylGen ddt() { return {Kind::DDt, 0}; }
    static WeylGen xi() { return {Kind::Xi, 0}; }
    static WeylGen dxi() { return {Kind::DXi, 0}; }

    bool flips_parity() const { return kind == Kind::Xi || kind == Kind::DXi; }
};

std::string to_string(const WeylGen& g);

/// Image of `v` under one generator. On DegreeN and Fraction D_t is the
/// composite t o d/dt; d/dt elsewhere is a ConfigError.
Vector weyl_apply(const WeylGen& g, const Vector& v, const FamilySpec& family);

/// Word applied right to left: word.back() acts first.
Vector weyl_word_apply(const std::vector<WeylGen>& word, const Vector& v, const FamilySpec& family);

/// Linear combination of generator words.
struct WeylTerm {
    SymScalar coeff;
    std::vector<WeylGen> word;
};
using WeylOp = std::vector<WeylTerm>;

Vector weyl_op_apply(const WeylOp& op, const Vector& v, const FamilySpec& family);

/// Concatenated words with multiplied coefficients: (a * b)(v) = a(b(v)).
WeylOp weyl_op_compose(const WeylOp& a, const WeylOp& b);

} // namespace ramond

#pragma once

#include "g2v/gammaledger/gamma_expr.hpp"

#include <Eigen/Core>
#include <array>
#include <string>
#include <vector>

namespace g2v {

// sum_i coef[i] r_{i+1}, each coefficient affine in s
struct Character {
    std::array<Affine, 4> coef;

    Character() = default;
    explicit Character(const std::array<Affine, 4>& c) : coef(c) {}
    static Character constant(const Eigen::Vector4i& v);

    friend Character operator+(const Character& a, const Character& b);
    friend Character operator-(const Character& a, const Character& b);
    friend Character operator*(const Affine& k, const Character& a);  // k constant
    friend bool operator==(const Character&, const Character&) = default;

    bool is_constant() const;
    Eigen::Vector4i to_vector() const;  // requires integer constant coefficients
    // (s-3)r1 + (-1)r2 + (s-2)r3
    std::string str() const;
};

// a1 = r1-r2, a2 = r3+r4, a3 = r3-r4, a4 = r2-r3; j in 1..4
Eigen::Vector4i simple_root(int j);
// All 24 roots +-r_i +- r_j of D4.
std::vector<Eigen::Vector4i> d4_roots();
bool is_positive_root(const Eigen::Vector4i& r);

// (s-3)r1 + (s-2)r2 - r3
Character lambda_s();
// 3r1 + 2r2 + r3
Character delta_half();

// <a_j^v, lambda> under (r_i, r_j) = delta_ij; coroot = root since every root has norm^2 2.
Affine coroot_pairing(const Character& lambda, int j);
Character reflect(const Character& lambda, int j);
Eigen::Vector4i reflect(const Eigen::Vector4i& v, int j);

// Letters applied right to left.
using WeylWord = std::vector<int>;
// "[412343214]" or "412343214"
WeylWord parse_word(const std::string& text);
std::string to_string(const WeylWord& w);
Character apply_word(const WeylWord& w, const Character& lambda);
Eigen::Vector4i apply_word(const WeylWord& w, const Eigen::Vector4i& v);
// Matrix of the Weyl element on the r-basis.
Eigen::Matrix4i weyl_matrix(const WeylWord& w);

// r1 - r3, r1 - r4, r1 + r4, r1 + r3, r2 - r3, r2 - r4, r2 + r4, r2 + r3, r1 + r2
std::vector<Eigen::Vector4i> heisenberg_roots();

struct WordCheck {
    bool length_reduced = false;   // number of positive roots made negative equals the word length
    bool n_roots_negated = false;  // the positive roots made negative are exactly the Heisenberg roots
    int inversions = 0;
};
WordCheck word_check(const WeylWord& w);

enum class OperatorKind { xy, pm };
std::string to_string(OperatorKind k);

struct WalkRow {
    int j = 0;
    Affine pairing;
    OperatorKind kind = OperatorKind::xy;
    Character character;  // after the reflection
    friend bool operator==(const WalkRow&, const WalkRow&) = default;
};

// One row per letter, in the order applied (rightmost letter first).
std::vector<WalkRow> reflection_walk(const Character& lambda, const WeylWord& w);
// prod Lambda(pairing) / Lambda(pairing + 1)
GammaExpr lambda_ratio_product(const std::vector<WalkRow>& rows);

// The published walk of lambda_s along [412434214]: letter, pairing and new character per row.
std::vector<WalkRow> expected_heisenberg_walk();
// prod Lambda(s-3)^2 Lambda(s-4) Lambda(2s-5) / (Lambda(s-1)^2 Lambda(s) Lambda(2s-4))
GammaExpr expected_lambda_ratio();

// "Simple reflection | Intertwiner | New character" rows as text.
std::string render_walk(const std::vector<WalkRow>& rows);

}  // namespace g2v

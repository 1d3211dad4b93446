#include "g2v/rootsys/roots.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace g2v {

namespace {

void check_index(int j) {
    if (j < 1 || j > 4) throw std::invalid_argument("root index must be in 1..4");
}

// 2-s rather than -s+2
std::string table_form(const Affine& a) {
    if (a.is_constant()) return a.offset.str();
    std::ostringstream os;
    std::string var = a.slope == 1 ? "s" : a.slope == -1 ? "s" : abs(a.slope).str() + "s";
    if (a.slope.sign() > 0) {
        os << var;
        if (a.offset.sign() > 0) os << "+" << a.offset;
        if (a.offset.sign() < 0) os << a.offset;
    } else if (a.offset.is_zero()) {
        os << "-" << var;
    } else {
        os << a.offset << "-" << var;
    }
    return os.str();
}

}  // namespace

Character Character::constant(const Eigen::Vector4i& v) {
    Character out;
    for (int i = 0; i < 4; ++i) out.coef[i] = Affine::constant(v[i]);
    return out;
}

Character operator+(const Character& a, const Character& b) {
    Character out;
    for (int i = 0; i < 4; ++i) out.coef[i] = a.coef[i] + b.coef[i];
    return out;
}

Character operator-(const Character& a, const Character& b) {
    Character out;
    for (int i = 0; i < 4; ++i) out.coef[i] = a.coef[i] - b.coef[i];
    return out;
}

Character operator*(const Affine& k, const Character& a) {
    if (!k.is_constant()) throw std::invalid_argument("Character scaling needs a constant");
    Character out;
    for (int i = 0; i < 4; ++i) out.coef[i] = k.offset * a.coef[i];
    return out;
}

bool Character::is_constant() const {
    return std::all_of(coef.begin(), coef.end(), [](const Affine& a) { return a.is_constant(); });
}

Eigen::Vector4i Character::to_vector() const {
    Eigen::Vector4i v;
    for (int i = 0; i < 4; ++i) {
        if (!coef[i].is_constant() || !coef[i].offset.is_integer())
            throw std::invalid_argument("Character::to_vector: not an integral constant character");
        v[i] = static_cast<int>(coef[i].offset.num().get_si());
    }
    return v;
}

std::string Character::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (coef[i] == Affine()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << table_form(coef[i]) << ")r" << i + 1;
    }
    return first ? "0" : os.str();
}

Eigen::Vector4i simple_root(int j) {
    check_index(j);
    switch (j) {
        case 1: return {1, -1, 0, 0};
        case 2: return {0, 0, 1, 1};
        case 3: return {0, 0, 1, -1};
        default: return {0, 1, -1, 0};
    }
}

std::vector<Eigen::Vector4i> d4_roots() {
    std::vector<Eigen::Vector4i> out;
    for (int i = 0; i < 4; ++i)
        for (int k = i + 1; k < 4; ++k)
            for (int si : {1, -1})
                for (int sk : {1, -1}) {
                    Eigen::Vector4i r = Eigen::Vector4i::Zero();
                    r[i] = si;
                    r[k] = sk;
                    out.push_back(r);
                }
    return out;
}

bool is_positive_root(const Eigen::Vector4i& r) {
    for (int i = 0; i < 4; ++i)
        if (r[i] != 0) return r[i] > 0;
    return false;
}

Character lambda_s() {
    return Character({Affine::s_plus(-3), Affine::s_plus(-2), Affine::constant(-1), Affine()});
}

Character delta_half() { return Character::constant({3, 2, 1, 0}); }

Affine coroot_pairing(const Character& lambda, int j) {
    Eigen::Vector4i a = simple_root(j);
    Affine out;
    for (int i = 0; i < 4; ++i) out = out + Rational(a[i]) * lambda.coef[i];
    return out;
}

Character reflect(const Character& lambda, int j) {
    Affine k = coroot_pairing(lambda, j);
    Eigen::Vector4i a = simple_root(j);
    Character out = lambda;
    for (int i = 0; i < 4; ++i) out.coef[i] = out.coef[i] - Rational(a[i]) * k;
    return out;
}

Eigen::Vector4i reflect(const Eigen::Vector4i& v, int j) {
    Eigen::Vector4i a = simple_root(j);
    return v - v.dot(a) * a;
}

WeylWord parse_word(const std::string& text) {
    WeylWord w;
    for (char ch : text) {
        if (ch == '[' || ch == ']' || ch == ' ') continue;
        if (ch < '1' || ch > '4') throw std::invalid_argument("parse_word: letters must be 1..4");
        w.push_back(ch - '0');
    }
    return w;
}

std::string to_string(const WeylWord& w) {
    std::string out = "[";
    for (int j : w) out += static_cast<char>('0' + j);
    return out + "]";
}

Character apply_word(const WeylWord& w, const Character& lambda) {
    Character out = lambda;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect(out, *it);
    return out;
}

Eigen::Vector4i apply_word(const WeylWord& w, const Eigen::Vector4i& v) {
    Eigen::Vector4i out = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect(out, *it);
    return out;
}

Eigen::Matrix4i weyl_matrix(const WeylWord& w) {
    Eigen::Matrix4i m;
    for (int i = 0; i < 4; ++i) m.col(i) = apply_word(w, Eigen::Vector4i::Unit(i));
    return m;
}

std::vector<Eigen::Vector4i> heisenberg_roots() {
    return {{1, 0, -1, 0}, {1, 0, 0, -1}, {1, 0, 0, 1}, {1, 0, 1, 0}, {0, 1, -1, 0},
            {0, 1, 0, -1}, {0, 1, 0, 1},  {0, 1, 1, 0}, {1, 1, 0, 0}};
}

WordCheck word_check(const WeylWord& w) {
    auto key = [](const Eigen::Vector4i& r) { return std::array<int, 4>{r[0], r[1], r[2], r[3]}; };
    std::vector<std::array<int, 4>> negated, expected;
    for (const auto& r : d4_roots())
        if (is_positive_root(r) && !is_positive_root(apply_word(w, r))) negated.push_back(key(r));
    for (const auto& r : heisenberg_roots()) expected.push_back(key(r));
    std::sort(negated.begin(), negated.end());
    std::sort(expected.begin(), expected.end());
    WordCheck out;
    out.inversions = static_cast<int>(negated.size());
    out.length_reduced = out.inversions == static_cast<int>(w.size());
    out.n_roots_negated = negated == expected;
    return out;
}

std::string to_string(OperatorKind k) { return k == OperatorKind::xy ? "x,y" : "f+,f-"; }

std::vector<WalkRow> reflection_walk(const Character& lambda, const WeylWord& w) {
    std::vector<WalkRow> rows;
    Character current = lambda;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        WalkRow row;
        row.j = *it;
        row.pairing = coroot_pairing(current, row.j);
        row.kind = row.j == 4 ? OperatorKind::pm : OperatorKind::xy;
        current = reflect(current, row.j);
        row.character = current;
        rows.push_back(row);
    }
    return rows;
}

GammaExpr lambda_ratio_product(const std::vector<WalkRow>& rows) {
    GammaExpr out;
    for (const WalkRow& r : rows) out *= GammaExpr::lambda(r.pairing) / GammaExpr::lambda(r.pairing + Rational(1));
    return out;
}

std::vector<WalkRow> expected_heisenberg_walk() {
    const Affine s = Affine::s_plus(0);
    auto c = [](long k) { return Affine::constant(k); };
    auto row = [](int j, const Affine& pairing, std::array<Affine, 4> ch) {
        return WalkRow{j, pairing, j == 4 ? OperatorKind::pm : OperatorKind::xy, Character(ch)};
    };
    const Affine zero;
    return {
        row(4, s - 1, {s - 3, c(-1), s - 2, zero}),
        row(1, s - 2, {c(-1), s - 3, s - 2, zero}),
        row(2, s - 2, {c(-1), s - 3, zero, c(2) - s}),
        row(4, s - 3, {c(-1), zero, s - 3, c(2) - s}),
        row(3, Affine(2, -5), {c(-1), zero, c(2) - s, s - 3}),
        row(4, s - 2, {c(-1), c(2) - s, zero, s - 3}),
        row(2, s - 3, {c(-1), c(2) - s, c(3) - s, zero}),
        row(1, s - 3, {c(2) - s, c(-1), c(3) - s, zero}),
        row(4, s - 4, {c(2) - s, c(3) - s, c(-1), zero}),
    };
}

GammaExpr expected_lambda_ratio() {
    auto L = [](const Affine& a, int e) { return GammaExpr::lambda(a, e); };
    const Affine s = Affine::s_plus(0);
    return L(s - 3, 2) * L(s - 4, 1) * L(Affine(2, -5), 1) / (L(s - 1, 2) * L(s, 1) * L(Affine(2, -4), 1));
}

std::string render_walk(const std::vector<WalkRow>& rows) {
    std::ostringstream os;
    os << "Simple reflection | Intertwiner | New character\n";
    for (const WalkRow& r : rows) {
        os << "[" << r.j << "] | Lambda(" << table_form(r.pairing) << ")/Lambda(" << table_form(r.pairing + Rational(1))
           << ") [" << table_form(r.pairing) << ";" << to_string(r.kind) << "] | " << r.character.str() << "\n";
    }
    return os.str();
}

}  // namespace g2v

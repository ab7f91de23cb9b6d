#include "liecon/giw.hpp"

#include <cctype>
#include <sstream>

namespace liecon {

std::string ExponentRow::str() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeff.size(); ++i) {
        long c = coeff[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (std::abs(c) != 1) out << std::abs(c) << "*";
        out << "a" << (i + 1);
    }
    if (first) out << "0";
    out << (is_equality ? " = " : " >= ") << rhs;
    return out.str();
}

ExponentRow ExponentRow::parse(const std::string& text, int n) {
    ExponentRow row;
    row.coeff.assign(n, 0);
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;

    size_t cmp = s.find(">=");
    size_t cmp_len = 2;
    if (cmp == std::string::npos) {
        cmp = s.find('=');
        cmp_len = 1;
        row.is_equality = true;
    }
    if (cmp == std::string::npos)
        throw std::invalid_argument("ExponentRow::parse: missing '>=' or '=' in '" + text + "'");
    std::string lhs = s.substr(0, cmp);
    row.rhs = std::stoi(s.substr(cmp + cmp_len));
    if (row.rhs != 0 && row.rhs != 1)
        throw std::invalid_argument("ExponentRow::parse: rhs must be 0 or 1");

    size_t pos = 0;
    while (pos < lhs.size()) {
        long sign = 1;
        if (lhs[pos] == '+') {
            ++pos;
        } else if (lhs[pos] == '-') {
            sign = -1;
            ++pos;
        }
        long mult = 1;
        size_t d = pos;
        while (d < lhs.size() && std::isdigit(static_cast<unsigned char>(lhs[d]))) ++d;
        if (d > pos) {
            mult = std::stol(lhs.substr(pos, d - pos));
            pos = d;
            if (pos < lhs.size() && lhs[pos] == '*') ++pos;
        }
        if (pos >= lhs.size() || lhs[pos] != 'a')
            throw std::invalid_argument("ExponentRow::parse: expected 'a<k>' in '" + text + "'");
        ++pos;
        d = pos;
        while (d < lhs.size() && std::isdigit(static_cast<unsigned char>(lhs[d]))) ++d;
        if (d == pos) throw std::invalid_argument("ExponentRow::parse: expected index after 'a'");
        int k = std::stoi(lhs.substr(pos, d - pos));
        pos = d;
        if (k < 1 || k > n)
            throw std::invalid_argument("ExponentRow::parse: variable a" + std::to_string(k) +
                                        " out of range");
        row.coeff[k - 1] += sign * mult;
    }
    return row;
}

ExponentProblem build_problem(const StructureTensor<Rational>& c,
                              const StructureTensor<Rational>& c0) {
    if (c.dim() != c0.dim()) throw std::invalid_argument("build_problem: dimension mismatch");
    ExponentProblem p;
    p.n = c.dim();
    for (const auto& [key, val] : c.table()) {
        ExponentRow row;
        row.coeff.assign(p.n, 0);
        row.coeff[key.i - 1] += 1;
        row.coeff[key.j - 1] += 1;
        row.coeff[key.k - 1] -= 1;
        Rational target = c0.get(key.i, key.j, key.k);
        if (target == val) {
            row.is_equality = true;
            row.rhs = 0;
        } else if (target.is_zero()) {
            row.is_equality = false;
            row.rhs = 1;
        } else {
            p.infeasible_reason = "target has a different nonzero value at (" +
                                  std::to_string(key.i) + "," + std::to_string(key.j) + "," +
                                  std::to_string(key.k) + ")";
            return p;
        }
        p.rows.push_back(std::move(row));
    }
    for (const auto& [key, val] : c0.table()) {
        if (c.get(key.i, key.j, key.k).is_zero()) {
            p.infeasible_reason = "target nonzero where source is zero, at (" +
                                  std::to_string(key.i) + "," + std::to_string(key.j) + "," +
                                  std::to_string(key.k) + ")";
            return p;
        }
    }
    return p;
}

namespace {

// Phase-one simplex, minimizing the sum of artificial variables, with
// Bland's rule for both entering and leaving choices. Free variables are
// split as a = u - w; inequality rows get a surplus column.
class PhaseOneSimplex {
public:
    explicit PhaseOneSimplex(const ExponentProblem& p) : n_(p.n), m_(p.rows.size()) {
        cols_ = 2 * n_ + static_cast<int>(m_);  // u, w, surplus block
        // tableau: m_ rows of [A | b], basis of artificials
        tab_.assign(m_, std::vector<Rational>(cols_ + m_ + 1, Rational(0)));
        basis_.resize(m_);
        int surplus = 0;
        for (size_t r = 0; r < m_; ++r) {
            const ExponentRow& row = p.rows[r];
            Rational b(row.rhs);
            std::vector<Rational> a(cols_, Rational(0));
            for (int v = 0; v < n_; ++v) {
                a[v] = Rational(row.coeff[v]);
                a[n_ + v] = Rational(-row.coeff[v]);
            }
            if (!row.is_equality) a[2 * n_ + surplus++] = Rational(-1);
            if (b < Rational(0)) {
                b = -b;
                for (auto& x : a) x = -x;
            }
            for (int cidx = 0; cidx < cols_; ++cidx) tab_[r][cidx] = a[cidx];
            tab_[r][cols_ + static_cast<int>(r)] = Rational(1);  // artificial
            tab_[r].back() = b;
            basis_[r] = cols_ + static_cast<int>(r);
        }
    }

    // Returns the alpha vector when a feasible basic solution exists.
    std::optional<std::vector<Rational>> solve() {
        while (true) {
            int entering = -1;
            for (int col = 0; col < cols_; ++col) {
                if (reduced_cost(col) < Rational(0)) {
                    entering = col;
                    break;  // Bland: smallest index
                }
            }
            if (entering < 0) break;
            int leaving = -1;
            Rational best_ratio;
            for (size_t r = 0; r < m_; ++r) {
                if (tab_[r][entering] <= Rational(0)) continue;
                Rational ratio = tab_[r].back() / tab_[r][entering];
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leaving])) {
                    leaving = static_cast<int>(r);
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) break;  // unbounded phase-one objective cannot happen
            pivot(leaving, entering);
        }
        if (objective() != Rational(0)) return std::nullopt;
        std::vector<Rational> alpha(n_, Rational(0));
        for (size_t r = 0; r < m_; ++r) {
            int v = basis_[r];
            if (v < n_)
                alpha[v] += tab_[r].back();
            else if (v < 2 * n_)
                alpha[v - n_] -= tab_[r].back();
        }
        return alpha;
    }

private:
    // cost vector: 1 on artificials, 0 elsewhere; reduced cost of a column
    // is c_j - sum over rows of (cost of basic var) * a_rj.
    Rational reduced_cost(int col) const {
        Rational rc(col >= cols_ ? 1 : 0);
        for (size_t r = 0; r < m_; ++r)
            if (basis_[r] >= cols_) rc -= tab_[r][col];
        return rc;
    }

    Rational objective() const {
        Rational obj(0);
        for (size_t r = 0; r < m_; ++r)
            if (basis_[r] >= cols_) obj += tab_[r].back();
        return obj;
    }

    void pivot(int row, int col) {
        Rational inv = tab_[row][col].inverse();
        for (auto& x : tab_[row]) x *= inv;
        for (size_t r = 0; r < m_; ++r) {
            if (static_cast<int>(r) == row) continue;
            Rational f = tab_[r][col];
            if (f.is_zero()) continue;
            for (size_t cidx = 0; cidx < tab_[r].size(); ++cidx)
                tab_[r][cidx] -= f * tab_[row][cidx];
        }
        basis_[row] = col;
    }

    int n_, cols_;
    size_t m_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<int> basis_;
};

}  // namespace

LpResult lp_feasible(const ExponentProblem& p) {
    LpResult res;
    if (p.infeasible_reason) return res;
    if (p.rows.empty()) {
        res.feasible = true;
        res.point.assign(p.n, Rational(0));
        return res;
    }
    PhaseOneSimplex simplex(p);
    auto alpha = simplex.solve();
    if (!alpha) return res;
    res.feasible = true;
    res.point = std::move(*alpha);
    return res;
}

std::vector<long> integerize(const std::vector<Rational>& x, const ExponentProblem& p) {
    mpz_class lcm_den(1);
    for (const auto& v : x) {
        mpz_class d = v.den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
        lcm_den = lcm_den / g * d;
    }
    Rational m{mpq_class(lcm_den)};
    std::vector<long> out;
    out.reserve(x.size());
    for (const auto& v : x) {
        Rational scaled = v * m;
        out.push_back(scaled.num().get_si());
    }
    for (const auto& row : p.rows)
        if (!row_satisfied(row, out))
            throw std::logic_error("integerize: scaled point violates a row");
    return out;
}

Feasibility giw_feasible(const StructureTensor<Rational>& c,
                         const StructureTensor<Rational>& c0) {
    Feasibility f;
    ExponentProblem p = build_problem(c, c0);
    LpResult lp = lp_feasible(p);
    if (!lp.feasible) return f;
    f.feasible = true;
    f.alpha = integerize(lp.point, p);
    return f;
}

NecessityResult necessity_query(const ExponentProblem& p, const ExponentRow& extra_row) {
    ExponentProblem q = p;
    q.rows.push_back(extra_row);
    NecessityResult res;
    LpResult lp = lp_feasible(q);
    if (!lp.feasible) {
        res.forced = true;
        return res;
    }
    res.alpha = integerize(lp.point, q);
    return res;
}

bool row_satisfied(const ExponentRow& row, const std::vector<Rational>& x) {
    Rational v(0);
    for (size_t i = 0; i < row.coeff.size(); ++i) v += Rational(row.coeff[i]) * x[i];
    return row.is_equality ? v == Rational(row.rhs) : v >= Rational(row.rhs);
}

bool row_satisfied(const ExponentRow& row, const std::vector<long>& x) {
    long v = 0;
    for (size_t i = 0; i < row.coeff.size(); ++i) v += row.coeff[i] * x[i];
    return row.is_equality ? v == row.rhs : v >= row.rhs;
}

}  // namespace liecon

#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "liecon/matrix.hpp"

namespace liecon {

/// Structure-constant tensor of an n-dimensional algebra: sparse map from
/// (i, j, k) with 1 <= i < j <= n, 1 <= k <= n, to nonzero scalars. The
/// antisymmetric counterpart c^k_{ji} = -c^k_{ij} is implicit.
template <class S>
class StructureTensor {
public:
    struct Key {
        int i, j, k;
        auto operator<=>(const Key&) const = default;
    };

    StructureTensor() : n_(0) {}
    explicit StructureTensor(int n, std::string name = {}) : n_(n), name_(std::move(name)) {
        if (n <= 0) throw std::invalid_argument("StructureTensor: dimension must be positive");
    }

    int dim() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    const std::map<Key, S>& table() const { return table_; }

    /// Stores c^k_{ij}; requires i < j. A zero value erases the entry.
    void set(int i, int j, int k, const S& v) {
        check_indices(i, j, k);
        Key key{i, j, k};
        if (scalar_is_zero(v))
            table_.erase(key);
        else
            table_[key] = v;
    }

    /// c^k_{ij} for any i, j (antisymmetry applied; zero when i = j).
    S get(int i, int j, int k) const {
        if (i == j) return S(0);
        bool flip = i > j;
        if (flip) std::swap(i, j);
        check_indices(i, j, k);
        auto it = table_.find(Key{i, j, k});
        if (it == table_.end()) return S(0);
        return flip ? S(0) - it->second : it->second;
    }

    friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
        return a.n_ == b.n_ && a.table_ == b.table_;
    }

private:
    void check_indices(int i, int j, int k) const {
        if (i < 1 || j <= i || j > n_ || k < 1 || k > n_)
            throw std::out_of_range("StructureTensor: indices out of range");
    }
    int n_;
    std::string name_;
    std::map<Key, S> table_;
};

template <class S>
struct JacobiDefect {
    int i, j, m;            // i < j < m
    std::vector<S> defect;  // n components, some nonzero
};

/// Jacobi-identity defects. Empty result means the tensor lies on the
/// variety of Lie brackets.
template <class S>
std::vector<JacobiDefect<S>> jacobi_defects(const StructureTensor<S>& c) {
    const int n = c.dim();
    std::vector<JacobiDefect<S>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int m = j + 1; m <= n; ++m) {
                std::vector<S> d(n, S(0));
                bool nonzero = false;
                for (int k = 1; k <= n; ++k) {
                    S acc(0);
                    for (int a = 1; a <= n; ++a) {
                        acc += c.get(i, j, a) * c.get(a, m, k);
                        acc += c.get(m, i, a) * c.get(a, j, k);
                        acc += c.get(j, m, a) * c.get(a, i, k);
                    }
                    if (!scalar_is_zero(acc)) nonzero = true;
                    d[k - 1] = acc;
                }
                if (nonzero) out.push_back({i, j, m, std::move(d)});
            }
    return out;
}

/// Right action C ∘ U: c'^k_{ij} = U_{ri} U_{sj} (U^{-1})_{km} c^m_{rs},
/// i.e. the bracket pulled back through U (columns are images of basis
/// vectors). Exact over exact scalars; throws on singular U.
template <class S>
StructureTensor<S> act(const StructureTensor<S>& c, const Matrix<S>& u) {
    const int n = c.dim();
    if (u.dim() != n) throw std::invalid_argument("act: dimension mismatch");
    Matrix<S> uinv = inverse(u);
    StructureTensor<S> out(n, c.name());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                S acc(0);
                for (const auto& [key, val] : c.table()) {
                    // stored (a, b, m) contributes with both orientations
                    S w = (u(key.i, i) * u(key.j, j) - u(key.j, i) * u(key.i, j)) *
                          uinv(k, key.k) * val;
                    acc += w;
                }
                out.set(i, j, k, acc);
            }
    return out;
}

/// Componentwise limit at t -> 0+; reports the first diverging triple.
struct TensorLimit {
    bool finite;
    StructureTensor<Rational> tensor;         // valid iff finite
    StructureTensor<Rational>::Key diverges;  // valid iff !finite
};
TensorLimit limit_tensor(const StructureTensor<ParamScalar>& c);

StructureTensor<ParamScalar> lift(const StructureTensor<Rational>& c);
StructureTensor<double> to_double(const StructureTensor<Rational>& c);

/// Block sum; indices of c2 are shifted by dim(c1).
template <class S>
StructureTensor<S> direct_sum(const StructureTensor<S>& c1, const StructureTensor<S>& c2) {
    StructureTensor<S> out(c1.dim() + c2.dim());
    for (const auto& [k, v] : c1.table()) out.set(k.i, k.j, k.k, v);
    for (const auto& [k, v] : c2.table())
        out.set(k.i + c1.dim(), k.j + c1.dim(), k.k + c1.dim(), v);
    return out;
}

/// Catalog of the algebras in play: "a" (n >= 5), "a0" (n >= 5),
/// "abelian" (n >= 1), "heisenberg" (n = 3).
StructureTensor<Rational> catalog(const std::string& name, int n);

/// Parses "a:5", "a0:6", "abelian:4", "heisenberg".
StructureTensor<Rational> catalog_by_spec(const std::string& spec);

// JSON algebra files: {"name": str, "dim": int, "brackets":
//   [{"i": int, "j": int, "out": {"k": "rational", ...}}, ...]}
StructureTensor<Rational> load_algebra_json(const std::string& json_text);
StructureTensor<Rational> load_algebra(const std::string& path_or_builtin);
std::string algebra_to_json(const StructureTensor<Rational>& c);

}  // namespace liecon

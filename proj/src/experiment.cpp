#include "liecon/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

namespace liecon {

// ---------------------------------------------------------------------------
// config / report serialization

std::string ExperimentConfig::to_json() const {
    nlohmann::json j;
    j["radii"] = radii;
    j["restarts"] = restarts;
    j["eval_budget"] = eval_budget;
    j["seed"] = seed;
    j["det_floor"] = det_floor;
    j["step_tol"] = step_tol;
    j["value_tol"] = value_tol;
    return j.dump(2);
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ExperimentConfig c;
    c.radii = j.at("radii").get<std::vector<double>>();
    c.restarts = j.value("restarts", c.restarts);
    c.eval_budget = j.value("eval_budget", c.eval_budget);
    c.seed = j.value("seed", c.seed);
    c.det_floor = j.value("det_floor", c.det_floor);
    c.step_tol = j.value("step_tol", c.step_tol);
    c.value_tol = j.value("value_tol", c.value_tol);
    for (size_t i = 1; i < c.radii.size(); ++i)
        if (!(c.radii[i] > c.radii[i - 1]))
            throw std::invalid_argument("ExperimentConfig: radii must be strictly increasing");
    if (c.restarts < 1) throw std::invalid_argument("ExperimentConfig: restarts >= 1 required");
    return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

// ---------------------------------------------------------------------------
// objective

namespace {

struct Triple {
    int i, j, k;
    double v;
};

// act(C, U) - C0 over i<j, k, without the tensor-map overhead; called
// millions of times per scan.
struct Objective {
    int n;
    std::vector<Triple> c;                 // stored triples of the source
    std::vector<std::vector<double>> c0;   // dense target, [pair(i,j)][k]
    std::vector<std::pair<int, int>> ij;   // all i<j pairs
    double det_floor;

    Objective(const StructureTensor<double>& cc, const StructureTensor<double>& cc0,
              double floor)
        : n(cc.dim()), det_floor(floor) {
        for (const auto& [key, val] : cc.table()) c.push_back({key.i, key.j, key.k, val});
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                ij.emplace_back(i, j);
                std::vector<double> row(n, 0.0);
                for (int k = 1; k <= n; ++k) row[k - 1] = cc0.get(i, j, k);
                c0.push_back(std::move(row));
            }
    }

    double operator()(const std::vector<double>& x) const {
        // x is U row-major
        auto u = [&](int i, int j) { return x[(i - 1) * n + (j - 1)]; };
        // det + inverse by Gaussian elimination with partial pivoting
        std::vector<double> a(x);
        std::vector<double> inv(n * n, 0.0);
        for (int i = 0; i < n; ++i) inv[i * n + i] = 1.0;
        double d = 1.0;
        for (int col = 0; col < n; ++col) {
            int piv = col;
            for (int r = col + 1; r < n; ++r)
                if (std::fabs(a[r * n + col]) > std::fabs(a[piv * n + col])) piv = r;
            if (a[piv * n + col] == 0.0) return 1e6 * det_floor / 1e-300;
            if (piv != col) {
                for (int j = 0; j < n; ++j) {
                    std::swap(a[piv * n + j], a[col * n + j]);
                    std::swap(inv[piv * n + j], inv[col * n + j]);
                }
                d = -d;
            }
            double p = a[col * n + col];
            d *= p;
            double ip = 1.0 / p;
            for (int j = 0; j < n; ++j) {
                a[col * n + j] *= ip;
                inv[col * n + j] *= ip;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                double f = a[r * n + col];
                if (f == 0.0) continue;
                for (int j = 0; j < n; ++j) {
                    a[r * n + j] -= f * a[col * n + j];
                    inv[r * n + j] -= f * inv[col * n + j];
                }
            }
        }
        if (std::fabs(d) <= det_floor) return 1e6 * det_floor / std::max(std::fabs(d), 1e-300);

        double s = 0;
        for (size_t p = 0; p < ij.size(); ++p) {
            auto [i, j] = ij[p];
            for (int k = 1; k <= n; ++k) {
                double acc = 0;
                for (const auto& t : c) {
                    double w = u(t.i, i) * u(t.j, j) - u(t.j, i) * u(t.i, j);
                    acc += w * inv[(k - 1) * n + (t.k - 1)] * t.v;
                }
                double r = acc - c0[p][k - 1];
                s += r * r;
            }
        }
        return s;
    }
};

double norm2(const std::vector<double>& x) {
    double s = 0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

void project(std::vector<double>& x, double radius) {
    double nrm = norm2(x);
    if (nrm > radius) {
        double f = radius / nrm;
        for (double& v : x) v *= f;
    }
}

// Nelder-Mead with adaptive coefficients and projection onto the radius
// ball before every evaluation. Stops on budget, simplex collapse, or a
// value at value_tol.
template <class F>
std::pair<std::vector<double>, double> nelder_mead(const F& f, std::vector<double> x0,
                                                   double radius, double init_step,
                                                   int& budget, double step_tol,
                                                   double value_tol) {
    const size_t d = x0.size();
    const double alpha = 1.0;
    const double beta = 1.0 + 2.0 / static_cast<double>(d);
    const double gamma = 0.75 - 0.5 / static_cast<double>(d);
    const double delta = 1.0 - 1.0 / static_cast<double>(d);

    struct Vertex {
        std::vector<double> x;
        double fx;
    };
    auto eval = [&](std::vector<double> x) {
        project(x, radius);
        --budget;
        double fx = f(x);
        return Vertex{std::move(x), fx};
    };

    std::vector<Vertex> s;
    s.reserve(d + 1);
    s.push_back(eval(x0));
    for (size_t i = 0; i < d && budget > 0; ++i) {
        std::vector<double> x = x0;
        x[i] += init_step;
        s.push_back(eval(x));
    }
    auto by_value = [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; };
    std::sort(s.begin(), s.end(), by_value);

    while (budget > 0 && s.size() == d + 1) {
        if (s.front().fx <= value_tol) break;
        // centroid of all but the worst
        std::vector<double> cen(d, 0.0);
        for (size_t i = 0; i + 1 < s.size(); ++i)
            for (size_t j = 0; j < d; ++j) cen[j] += s[i].x[j];
        for (size_t j = 0; j < d; ++j) cen[j] /= static_cast<double>(d);

        double spread = 0;
        for (size_t j = 0; j < d; ++j)
            spread = std::max(spread, std::fabs(s.back().x[j] - s.front().x[j]));
        if (spread < step_tol) break;

        auto blend = [&](double t) {
            std::vector<double> x(d);
            for (size_t j = 0; j < d; ++j) x[j] = cen[j] + t * (cen[j] - s.back().x[j]);
            return x;
        };

        Vertex refl = eval(blend(alpha));
        if (refl.fx < s.front().fx) {
            if (budget <= 0) {
                s.back() = refl;
                break;
            }
            Vertex expd = eval(blend(beta));
            s.back() = expd.fx < refl.fx ? std::move(expd) : std::move(refl);
        } else if (refl.fx < s[d - 1].fx) {
            s.back() = std::move(refl);
        } else {
            bool outside = refl.fx < s.back().fx;
            if (budget <= 0) break;
            Vertex ctr = eval(blend(outside ? gamma : -gamma));
            if (ctr.fx < std::min(refl.fx, s.back().fx)) {
                s.back() = std::move(ctr);
            } else {
                // shrink toward the best vertex
                for (size_t i = 1; i < s.size() && budget > 0; ++i) {
                    std::vector<double> x(d);
                    for (size_t j = 0; j < d; ++j)
                        x[j] = s[0].x[j] + delta * (s[i].x[j] - s[0].x[j]);
                    s[i] = eval(std::move(x));
                }
            }
        }
        std::sort(s.begin(), s.end(), by_value);
    }
    std::sort(s.begin(), s.end(), by_value);
    return {s.front().x, s.front().fx};
}

}  // namespace

double objective(const StructureTensor<double>& c, const StructureTensor<double>& c0,
                 const Matrix<double>& u, double det_floor) {
    Objective f(c, c0, det_floor);
    std::vector<double> x(static_cast<size_t>(u.dim()) * u.dim());
    for (int i = 1; i <= u.dim(); ++i)
        for (int j = 1; j <= u.dim(); ++j) x[(i - 1) * u.dim() + (j - 1)] = u(i, j);
    return f(x);
}

MinimizeResult minimize_under_radius(const StructureTensor<Rational>& c,
                                     const StructureTensor<Rational>& c0, double radius,
                                     const ExperimentConfig& config) {
    if (radius <= 0) throw std::invalid_argument("minimize_under_radius: radius must be > 0");
    const int n = c.dim();
    const size_t d = static_cast<size_t>(n) * n;
    Objective f(to_double(c), to_double(c0), config.det_floor);

    MinimizeResult best;
    best.residual = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < config.restarts; ++restart) {
        std::mt19937_64 rng(config.seed + 0x9e3779b97f4a7c15ULL * (restart + 1));
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::uniform_real_distribution<double> unif(0.0, 1.0);

        std::vector<double> x0(d);
        for (auto& v : x0) v = gauss(rng);
        double scale = radius * unif(rng) / std::max(norm2(x0), 1e-12);
        for (auto& v : x0) v *= scale;

        int budget = config.eval_budget;
        double step = 0.05 * radius;
        auto [x, fx] = nelder_mead(f, x0, radius, step, budget, config.step_tol,
                                   config.value_tol);
        if (fx < best.residual) {
            best.residual = fx;
            best.restart_index = restart;
            Matrix<double> u(n);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) u(i, j) = x[(i - 1) * n + (j - 1)];
            best.u_best = u;
        }
    }
    return best;
}

ExperimentReport scan_radii(const StructureTensor<Rational>& c,
                            const StructureTensor<Rational>& c0,
                            const ExperimentConfig& config) {
    if (config.radii.size() < 2)
        throw std::invalid_argument("scan_radii: need at least two radii");
    for (size_t k = 0; k < config.radii.size(); ++k)
        if (config.radii[k] <= 0 || (k > 0 && config.radii[k] <= config.radii[k - 1]))
            throw std::invalid_argument("scan_radii: radii must be positive and strictly increasing");
    ExperimentReport rep;

    MinimizeResult carried;  // best point so far; feasible at every larger radius
    bool have_carried = false;
    for (double radius : config.radii) {
        MinimizeResult r = minimize_under_radius(c, c0, radius, config);
        if (have_carried && carried.residual < r.residual) r = carried;
        carried = r;
        have_carried = true;
        RadiusRow row;
        row.radius = radius;
        row.best_residual = r.residual;
        row.best_norm = r.u_best.frobenius_norm();
        row.restart_index = r.restart_index;
        rep.rows.push_back(row);
    }

    // least squares on (log R, log residual), skipping at-floor rows
    const double floor = 1e-6;
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : rep.rows)
        if (row.best_residual > floor)
            pts.emplace_back(std::log(row.radius), std::log(row.best_residual));
    if (pts.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto [x, y] : pts) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double m = pts.size();
        rep.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        rep.slope_meaningful = true;
    }
    return rep;
}

std::string ExperimentReport::to_json() const {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows)
        j["rows"].push_back({{"radius", r.radius},
                             {"best_residual", r.best_residual},
                             {"best_norm", r.best_norm},
                             {"restart_index", r.restart_index}});
    j["slope"] = slope;
    j["slope_meaningful"] = slope_meaningful;
    return j.dump(2);
}

ExperimentReport ExperimentReport::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ExperimentReport rep;
    for (const auto& r : j.at("rows")) {
        RadiusRow row;
        row.radius = r.at("radius").get<double>();
        row.best_residual = r.at("best_residual").get<double>();
        row.best_norm = r.at("best_norm").get<double>();
        row.restart_index = r.at("restart_index").get<int>();
        rep.rows.push_back(row);
    }
    rep.slope = j.at("slope").get<double>();
    rep.slope_meaningful = j.at("slope_meaningful").get<bool>();
    return rep;
}

std::string ExperimentReport::to_csv() const {
    std::ostringstream out;
    out << "radius,best_residual,best_norm,restart_index\n";
    out.precision(17);
    for (const auto& r : rows)
        out << r.radius << "," << r.best_residual << "," << r.best_norm << ","
            << r.restart_index << "\n";
    return out.str();
}

}  // namespace liecon

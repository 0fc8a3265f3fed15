#include "heliumq/least_squares.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heliumq {

double FitResult::value(const std::string& name) const {
    for (const auto& p : params) {
        if (p.name == name) return p.value;
    }
    throw std::invalid_argument("no fitted parameter named '" + name + "'");
}

namespace {

std::string format_point(std::span<const double> x) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) os << ", ";
        os << x[i];
    }
    os << ")";
    return os.str();
}

double sum_of_squares(std::span<const double> r) {
    return std::inner_product(r.begin(), r.end(), r.begin(), 0.0);
}

class ScaledProblem {
public:
    ScaledProblem(const ResidualFn& fn, std::span<const double> x0,
                  std::span<const std::pair<double, double>> bounds)
        : fn_(fn), dim_(x0.size()) {
        scale_.resize(dim_);
        lo_.resize(dim_);
        hi_.resize(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            const auto [lb, ub] = bounds[i];
            if (!(lb <= ub)) throw std::invalid_argument("inverted bounds interval");
            if (x0[i] < lb || x0[i] > ub) {
                throw std::invalid_argument("initial point outside bounds");
            }
            double s = std::max({std::abs(x0[i]), std::abs(lb), std::abs(ub)});
            if (!std::isfinite(s) || s == 0.0) s = 1.0;
            scale_[i] = s;
            lo_[i] = lb / s;
            hi_[i] = ub / s;
        }
    }

    std::size_t dim() const { return dim_; }

    std::vector<double> to_scaled(std::span<const double> x) const {
        std::vector<double> z(dim_);
        for (std::size_t i = 0; i < dim_; ++i) z[i] = x[i] / scale_[i];
        return z;
    }

    std::vector<double> to_native(std::span<const double> z) const {
        std::vector<double> x(dim_);
        for (std::size_t i = 0; i < dim_; ++i) x[i] = z[i] * scale_[i];
        return x;
    }

    void clamp(std::vector<double>& z) const {
        for (std::size_t i = 0; i < dim_; ++i) z[i] = std::clamp(z[i], lo_[i], hi_[i]);
    }

    double lo(std::size_t i) const { return lo_[i]; }
    double hi(std::size_t i) const { return hi_[i]; }

    std::vector<double> residuals(std::span<const double> z) {
        ++n_evaluations_;
        const std::vector<double> x = to_native(z);
        std::vector<double> r = fn_(x);
        for (double v : r) {
            if (!std::isfinite(v)) {
                throw std::runtime_error("objective returned a non-finite residual at " +
                                         format_point(x));
            }
        }
        return r;
    }

    double cost(std::span<const double> z) { return sum_of_squares(residuals(z)); }

    int n_evaluations() const { return n_evaluations_; }

private:
    const ResidualFn& fn_;
    std::size_t dim_;
    std::vector<double> scale_, lo_, hi_;
    int n_evaluations_ = 0;
};

struct SimplexOutcome {
    std::vector<double> best;
    double cost = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Standard Nelder-Mead on the scaled box; candidates are clamped into bounds.
SimplexOutcome nelder_mead(ScaledProblem& prob, std::span<const double> z0, double step,
                           const LsqOptions& opt, int max_iter) {
    const std::size_t n = prob.dim();
    std::vector<std::vector<double>> verts;
    std::vector<double> costs;
    verts.push_back(std::vector<double>(z0.begin(), z0.end()));
    for (std::size_t i = 0; i < n; ++i) {
        auto v = verts[0];
        double delta = step * std::max(std::abs(v[i]), 0.1);
        if (v[i] + delta > prob.hi(i)) delta = -delta;
        v[i] += delta;
        prob.clamp(v);
        verts.push_back(v);
    }
    for (const auto& v : verts) costs.push_back(prob.cost(v));

    auto order = [&] {
        std::vector<std::size_t> idx(verts.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return costs[a] < costs[b]; });
        std::vector<std::vector<double>> v2;
        std::vector<double> c2;
        for (auto k : idx) {
            v2.push_back(verts[k]);
            c2.push_back(costs[k]);
        }
        verts.swap(v2);
        costs.swap(c2);
    };

    SimplexOutcome out;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        order();
        const double spread = std::abs(costs.back() - costs.front());
        double vert_spread = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double lo = verts[0][i], hi = verts[0][i];
            for (const auto& v : verts) {
                lo = std::min(lo, v[i]);
                hi = std::max(hi, v[i]);
            }
            vert_spread = std::max(vert_spread, (hi - lo) / std::max(1.0, std::abs(verts[0][i])));
        }
        // Either criterion ends the search: a collapsed simplex or a cost
        // spread negligible against the best cost (floored so zero-residual
        // problems can terminate).
        if (vert_spread <= opt.step_tol ||
            spread <= opt.residual_tol * std::max(std::abs(costs.front()), 1e-30)) {
            out.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
            for (std::size_t i = 0; i < n; ++i) centroid[i] += verts[k][i];
        }
        for (std::size_t i = 0; i < n; ++i) centroid[i] /= static_cast<double>(n);

        auto blend = [&](double coeff) {
            std::vector<double> p(n);
            for (std::size_t i = 0; i < n; ++i) {
                p[i] = centroid[i] + coeff * (centroid[i] - verts.back()[i]);
            }
            prob.clamp(p);
            return p;
        };

        const auto reflected = blend(1.0);
        const double f_reflected = prob.cost(reflected);
        if (f_reflected < costs.front()) {
            const auto expanded = blend(2.0);
            const double f_expanded = prob.cost(expanded);
            if (f_expanded < f_reflected) {
                verts.back() = expanded;
                costs.back() = f_expanded;
            } else {
                verts.back() = reflected;
                costs.back() = f_reflected;
            }
        } else if (f_reflected < costs[costs.size() - 2]) {
            verts.back() = reflected;
            costs.back() = f_reflected;
        } else {
            const bool outside = f_reflected < costs.back();
            const auto contracted = blend(outside ? 0.5 : -0.5);
            const double f_contracted = prob.cost(contracted);
            if (f_contracted < (outside ? f_reflected : costs.back())) {
                verts.back() = contracted;
                costs.back() = f_contracted;
            } else {
                for (std::size_t k = 1; k < verts.size(); ++k) {
                    for (std::size_t i = 0; i < n; ++i) {
                        verts[k][i] = verts[0][i] + 0.5 * (verts[k][i] - verts[0][i]);
                    }
                    prob.clamp(verts[k]);
                    costs[k] = prob.cost(verts[k]);
                }
            }
        }
    }
    order();
    out.best = verts.front();
    out.cost = costs.front();
    out.iterations = iter;
    return out;
}

// Damped Gauss-Newton with central-difference Jacobian.
SimplexOutcome gauss_newton_polish(ScaledProblem& prob, std::span<const double> z0,
                                   const LsqOptions& opt, int max_iter) {
    const std::size_t n = prob.dim();
    std::vector<double> z(z0.begin(), z0.end());
    std::vector<double> r = prob.residuals(z);
    double cost = sum_of_squares(r);
    const std::size_t m = r.size();

    SimplexOutcome out;
    double lambda = 1e-10;
    int iter = 0;
    bool converged = false;
    for (; iter < max_iter; ++iter) {
        Eigen::MatrixXd jac(m, n);
        for (std::size_t j = 0; j < n; ++j) {
            const double h = 1e-7 * std::max(std::abs(z[j]), 1e-4);
            auto zp = z, zm = z;
            zp[j] = std::min(zp[j] + h, prob.hi(j));
            zm[j] = std::max(zm[j] - h, prob.lo(j));
            const double width = zp[j] - zm[j];
            if (width == 0.0) {
                jac.col(j).setZero();
                continue;
            }
            const auto rp = prob.residuals(zp);
            const auto rm = prob.residuals(zm);
            for (std::size_t i = 0; i < m; ++i) {
                jac(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    (rp[i] - rm[i]) / width;
            }
        }
        Eigen::VectorXd rv = Eigen::Map<const Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(m));
        const Eigen::MatrixXd jtj = jac.transpose() * jac;
        const Eigen::VectorXd jtr = jac.transpose() * rv;

        bool stepped = false;
        double step_size = 0.0;
        for (int attempt = 0; attempt < 40; ++attempt) {
            Eigen::MatrixXd damped = jtj;
            damped.diagonal().array() += lambda * (jtj.diagonal().array().abs() + 1e-30);
            const Eigen::VectorXd dz = damped.ldlt().solve(-jtr);
            auto zn = z;
            for (std::size_t i = 0; i < n; ++i) zn[i] += dz(static_cast<Eigen::Index>(i));
            prob.clamp(zn);
            const auto rn = prob.residuals(zn);
            const double cn = sum_of_squares(rn);
            if (cn <= cost) {
                step_size = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    step_size = std::max(step_size,
                                         std::abs(zn[i] - z[i]) / std::max(1.0, std::abs(z[i])));
                }
                const double improvement = cost - cn;
                z = zn;
                r = rn;
                cost = cn;
                lambda = std::max(lambda * 0.25, 1e-14);
                stepped = true;
                if (step_size < opt.step_tol ||
                    improvement <= opt.residual_tol * std::max(cost, 1e-300)) {
                    converged = true;
                }
                break;
            }
            lambda *= 8.0;
        }
        if (!stepped) {
            converged = true;  // no descent direction left at damping limit
            break;
        }
        if (converged) break;
    }
    out.best = z;
    out.cost = cost;
    out.iterations = iter;
    out.converged = converged;
    return out;
}

}  // namespace

FitResult minimize_least_squares(const ResidualFn& objective, std::span<const double> x0,
                                 std::span<const std::pair<double, double>> bounds,
                                 std::span<const std::string> names, const LsqOptions& options) {
    const std::size_t n = x0.size();
    if (bounds.size() != n || names.size() != n) {
        throw std::invalid_argument("x0, bounds and names must have equal length");
    }
    if (n == 0) throw std::invalid_argument("empty parameter vector");

    ScaledProblem prob(objective, x0, bounds);
    const std::vector<double> z0 = prob.to_scaled(x0);
    {
        // Objective must be finite at the start.
        (void)prob.residuals(z0);
    }

    const int nm_budget = options.max_iterations;
    SimplexOutcome stage = nelder_mead(prob, z0, 0.10, options, nm_budget);
    SimplexOutcome restart = nelder_mead(prob, stage.best, 0.01, options,
                                         std::max(1, nm_budget - stage.iterations));
    if (restart.cost < stage.cost) {
        restart.iterations += stage.iterations;
        restart.converged = restart.converged || stage.converged;
        stage = restart;
    } else {
        stage.iterations += restart.iterations;
        stage.converged = stage.converged || restart.converged;
    }

    SimplexOutcome polished = gauss_newton_polish(prob, stage.best, options, 60);
    if (polished.cost <= stage.cost) {
        polished.iterations += stage.iterations;
        polished.converged = polished.converged || stage.converged;
        stage = polished;
    }

    const std::vector<double> solution = prob.to_native(stage.best);
    std::vector<double> final_residuals = objective(solution);

    FitResult result;
    result.params.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        FitParam p;
        p.name = names[i];
        p.value = solution[i];
        p.initial = x0[i];
        p.lower = bounds[i].first;
        p.upper = bounds[i].second;
        const double span = bounds[i].second - bounds[i].first;
        const double edge = 1e-9 * std::max(span, std::abs(p.value));
        p.at_bound = std::isfinite(span) && span > 0.0 &&
                     (std::abs(p.value - p.lower) <= edge || std::abs(p.value - p.upper) <= edge);
        if (p.at_bound) {
            result.notes.push_back("parameter '" + p.name + "' pegged at a bound");
        }
        result.params.push_back(std::move(p));
    }
    result.residuals = final_residuals;
    result.residual_norm =
        std::sqrt(sum_of_squares(final_residuals) / static_cast<double>(final_residuals.size()));
    result.n_iterations = stage.iterations;
    result.converged = stage.converged;
    return result;
}

}  // namespace heliumq

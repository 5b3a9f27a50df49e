#include "sizzle/lindblad.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <memory>
#include <sstream>

namespace sizzle {

namespace {

double rate_or_zero(double t) {
    return std::isfinite(t) ? 1.0 / t : 0.0;
}

double dephasing_rate(const TransmonSpec& q, DephasingModel model) {
    const double g2 = rate_or_zero(q.t2_star);
    const double g1 = rate_or_zero(q.t1);
    switch (model) {
        case DephasingModel::literal: return g2 - g1;
        case DephasingModel::pure_dephasing: return g2;
        case DephasingModel::total_coherence: return g2 - 0.5 * g1;
    }
    return 0.0;
}

} // namespace

CollapseSet build_collapse_set(const SystemSpec& system, CollapseMode mode,
                               DephasingModel model) {
    system.validate();
    const auto dims = system.level_dims();
    const int n = static_cast<int>(system.transmons.size());

    std::vector<double> g1(n), gph(n);
    for (int i = 0; i < n; ++i) {
        g1[i] = rate_or_zero(system.transmons[i].t1);
        gph[i] = dephasing_rate(system.transmons[i], model);
        if (gph[i] < 0.0)
            throw error("negative dephasing rate (t2_star > 2*t1 regime)");
    }

    CollapseSet set;
    set.mode = mode;
    if (mode == CollapseMode::per_qubit) {
        for (int i = 0; i < n; ++i) {
            if (g1[i] > 0.0)
                set.operators.push_back(
                    {dims, std::sqrt(g1[i]) * embed(destroy(dims[i]), i, dims)});
            if (gph[i] > 0.0)
                set.operators.push_back(
                    {dims, std::sqrt(2.0 * gph[i]) * embed(number_op(dims[i]), i, dims)});
        }
        set.per_qubit = PerQubitRates{g1, gph};
    } else {
        // The paper's literal summed operators: identical rates assumed
        // across qubits, so take qubit 0's.
        Mat asum = Mat::Zero(total_dim(dims), total_dim(dims));
        Mat nsum = asum;
        for (int i = 0; i < n; ++i) {
            asum += embed(destroy(dims[i]), i, dims);
            nsum += embed(number_op(dims[i]), i, dims);
        }
        if (g1[0] > 0.0) set.operators.push_back({dims, std::sqrt(g1[0]) * asum});
        if (gph[0] > 0.0)
            set.operators.push_back({dims, std::sqrt(2.0 * gph[0]) * nsum});
    }
    return set;
}

Mat expm_hermitian(const Mat& h, double tau) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    const auto& lam = es.eigenvalues();
    Vec phases(lam.size());
    for (Eigen::Index k = 0; k < lam.size(); ++k)
        phases[k] = std::exp(cplx(0.0, -tau * lam[k]));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

// Commutator-free 4th-order Magnus coefficients (two-exponential scheme
// on the Gauss-Legendre nodes).
const double kC1 = 0.5 - std::sqrt(3.0) / 6.0;
const double kC2 = 0.5 + std::sqrt(3.0) / 6.0;
const double kX1 = (3.0 - 2.0 * std::sqrt(3.0)) / 12.0;
const double kX2 = (3.0 + 2.0 * std::sqrt(3.0)) / 12.0;

// Yoshida 4th-order composition weights for the Hamiltonian/dissipator split.
const double kW1 = 1.0 / (2.0 - std::cbrt(2.0));
const double kW0 = 1.0 - 2.0 * kW1;

// Dissipator application. The per-qubit path uses the ladder/number
// structure directly; the generic path multiplies materialized operators.
class Dissipator {
  public:
    Dissipator(const CollapseSet& collapse, const std::vector<int>& dims)
        : collapse_(&collapse), dims_(dims) {
        const int d = total_dim(dims);
        if (collapse.per_qubit) {
            fast_ = true;
            const int n = static_cast<int>(dims.size());
            occ_.assign(n, std::vector<int>(d));
            stride_.assign(n, 0);
            int stride = 1;
            for (int i = n - 1; i >= 0; --i) {
                stride_[i] = stride;
                stride *= dims[i];
            }
            for (int i = 0; i < n; ++i)
                for (int r = 0; r < d; ++r) occ_[i][r] = (r / stride_[i]) % dims[i];
        } else {
            for (const auto& op : collapse.operators) {
                lops_.push_back(op.m);
                nops_.push_back(op.m.adjoint() * op.m);
            }
        }
    }

    bool empty() const { return collapse_->empty(); }

    void apply_derivative(const Mat& rho, Mat& out) const {
        const int d = static_cast<int>(rho.rows());
        out.setZero(d, d);
        if (fast_) {
            const auto& rates = *collapse_->per_qubit;
            const int n = static_cast<int>(dims_.size());
            for (int i = 0; i < n; ++i) {
                const double g1 = rates.gamma1[i];
                const double gph = rates.gamma_ph[i];
                if (g1 == 0.0 && gph == 0.0) continue;
                const int s = stride_[i];
                const int levels = dims_[i];
                const auto& occ = occ_[i];
                for (int r = 0; r < d; ++r) {
                    for (int c = 0; c < d; ++c) {
                        const int nr = occ[r], nc = occ[c];
                        cplx v(0.0, 0.0);
                        if (g1 > 0.0) {
                            if (nr + 1 < levels && nc + 1 < levels)
                                v += g1 * std::sqrt(double((nr + 1) * (nc + 1))) *
                                     rho(r + s, c + s);
                            v -= 0.5 * g1 * double(nr + nc) * rho(r, c);
                        }
                        if (gph > 0.0) {
                            const double dn = double(nr - nc);
                            v -= gph * dn * dn * rho(r, c);
                        }
                        out(r, c) += v;
                    }
                }
            }
        } else {
            for (size_t j = 0; j < lops_.size(); ++j) {
                out.noalias() += lops_[j] * rho * lops_[j].adjoint();
                out.noalias() -= 0.5 * (nops_[j] * rho + rho * nops_[j]);
            }
        }
    }

    // rho <- exp(D h) rho via a truncated series; the dissipator norm per
    // step is tiny so a few terms reach machine precision.
    void apply_exponential(Mat& rho, double h) const {
        if (empty() || h == 0.0) return;
        Mat term = rho;
        Mat deriv;
        double scale = rho.cwiseAbs().maxCoeff();
        if (scale == 0.0) return;
        for (int k = 1; k <= 12; ++k) {
            apply_derivative(term, deriv);
            term = (h / double(k)) * deriv;
            rho += term;
            if (term.cwiseAbs().maxCoeff() < 1e-17 * scale) return;
        }
    }

  private:
    const CollapseSet* collapse_;
    std::vector<int> dims_;
    bool fast_ = false;
    std::vector<std::vector<int>> occ_;
    std::vector<int> stride_;
    std::vector<Mat> lops_, nops_;
};

// One CF4 unitary over [t, t+h]; envelope pieces pinned by t_ref.
Mat cf4_unitary(const HamiltonianSchedule& sched, double t, double h, double t_ref,
                Mat& h1, Mat& h2) {
    sched.hamiltonian_into_ref(t + kC1 * h, t_ref, h1);
    sched.hamiltonian_into_ref(t + kC2 * h, t_ref, h2);
    const Mat right = expm_hermitian(kX2 * h1 + kX1 * h2, h);
    const Mat left = expm_hermitian(kX1 * h1 + kX2 * h2, h);
    return left * right;
}

struct SubstepCache {
    bool valid = false;
    double h = 0.0;
    double lo = 0.0, hi = 0.0; // window the cached factor was built on
    Mat u;
};

// Shared stepping context for all evolve variants.
class Stepper {
  public:
    Stepper(const HamiltonianSchedule& sched, const CollapseSet* collapse,
            const EvolveOptions& opt)
        : sched_(sched), opt_(opt), diss_(nullptr) {
        if (opt.dt <= 0.0 || opt.dt > 0.5)
            throw error("evolve: dt must satisfy 0 < dt <= 0.5 ns");
        if (collapse && !collapse->empty())
            diss_ = std::make_unique<Dissipator>(*collapse, sched.system().level_dims());
    }

    // Advances all matrices in `rhos` from t0 to t1. Steps are dt-sized
    // but never straddle an envelope segment boundary.
    void run(std::vector<Mat>& rhos, double t0, double t1) {
        double t = t0;
        const double dt = opt_.dt;
        long guard = 0;
        while (t < t1 - 1e-12) {
            const double bp = std::min(t1, sched_.next_breakpoint(t));
            const double h = std::min(dt, bp - t);
            if (opt_.integrator == Integrator::magnus4) {
                step_magnus(rhos, t, h);
            } else {
                step_rk4(rhos, t, h);
            }
            t += h;
            if (++guard % 500 == 0) drift_check(rhos, t);
        }
    }

    void run_states(std::vector<Mat>& states, double t0, double t1) {
        // Columns (or unitaries) evolved under H alone. Constant windows
        // are advanced with a single exact exponential.
        double t = t0;
        const double dt = opt_.dt;
        while (t < t1 - 1e-12) {
            const double bp = std::min(t1, sched_.next_breakpoint(t));
            if (sched_.constant_on(t, bp)) {
                const Mat u = expm_hermitian(sched_.hamiltonian(0.5 * (t + bp)), bp - t);
                for (auto& s : states) s = u * s;
                t = bp;
                continue;
            }
            const double h = std::min(dt, bp - t);
            const Mat u = cf4_unitary(sched_, t, h, t + 0.5 * h, h1_, h2_);
            for (auto& s : states) s = u * s;
            t += h;
        }
    }

  private:
    void step_magnus(std::vector<Mat>& rhos, double t, double h) {
        const double hs[3] = {kW1 * h, kW0 * h, kW1 * h};
        const double t_ref = t + 0.5 * h;
        double tl = t;
        for (int sub = 0; sub < 3; ++sub) {
            const double hh = hs[sub];
            const double lo = std::min(tl, tl + hh), hi = std::max(tl, tl + hh);
            auto& c = cache_[sub];
            // Reuse only if the same constant plateau spans both the cached
            // window and the current one (same H, same step size).
            const bool reusable = c.valid && c.h == hh &&
                                  sched_.constant_on(std::min(c.lo, lo), std::max(c.hi, hi));
            if (!reusable) {
                c.u = cf4_unitary(sched_, tl, hh, t_ref, h1_, h2_);
                c.h = hh;
                c.lo = lo;
                c.hi = hi;
                c.valid = sched_.constant_on(lo, hi);
            }
            for (auto& rho : rhos) {
                if (diss_) diss_->apply_exponential(rho, 0.5 * hh);
                rho = c.u * rho * c.u.adjoint();
                if (diss_) diss_->apply_exponential(rho, 0.5 * hh);
            }
            tl += hh;
        }
    }

    void step_rk4(std::vector<Mat>& rhos, double t, double h) {
        const double t_ref = t + 0.5 * h;
        sched_.hamiltonian_into_ref(t, t_ref, ha_);
        sched_.hamiltonian_into_ref(t + 0.5 * h, t_ref, hb_);
        sched_.hamiltonian_into_ref(t + h, t_ref, hc_);
        for (auto& rho : rhos) {
            derivative(ha_, rho, k1_);
            tmp_ = rho + 0.5 * h * k1_;
            derivative(hb_, tmp_, k2_);
            tmp_ = rho + 0.5 * h * k2_;
            derivative(hb_, tmp_, k3_);
            tmp_ = rho + h * k3_;
            derivative(hc_, tmp_, k4_);
            rho += (h / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
        }
    }

    void derivative(const Mat& h, const Mat& rho, Mat& out) {
        const cplx mi(0.0, -1.0);
        out.noalias() = mi * (h * rho - rho * h);
        if (diss_) {
            diss_->apply_derivative(rho, dtmp_);
            out += dtmp_;
        }
    }

    void drift_check(const std::vector<Mat>& rhos, double t) {
        if (!opt_.check_density || rhos.empty()) return;
        const Mat& r = rhos.front();
        if ((r - r.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
            std::ostringstream os;
            os << "evolve: Hermiticity drift at t=" << t
               << " ns; dt too large or malformed Hamiltonian";
            throw error(os.str());
        }
    }

    const HamiltonianSchedule& sched_;
    EvolveOptions opt_;
    std::unique_ptr<Dissipator> diss_;
    SubstepCache cache_[3];
    Mat h1_, h2_, ha_, hb_, hc_, k1_, k2_, k3_, k4_, tmp_, dtmp_;
};

} // namespace

DensityMatrix evolve(const DensityMatrix& rho0, const HamiltonianSchedule& schedule,
                     const CollapseSet& collapse, double t0, double t1,
                     const EvolveOptions& opt) {
    if (opt.check_density) rho0.validate();
    if (rho0.dim() != schedule.dim()) throw error("evolve: dimension mismatch");
    std::vector<Mat> batch{rho0.m};
    Stepper stepper(schedule, &collapse, opt);
    stepper.run(batch, t0, t1);
    DensityMatrix out{rho0.dims, std::move(batch.front())};
    if (opt.check_density) out.validate();
    return out;
}

std::vector<Mat> evolve_batch(const std::vector<Mat>& inputs,
                              const HamiltonianSchedule& schedule,
                              const CollapseSet& collapse, double t0, double t1,
                              const EvolveOptions& opt) {
    std::vector<Mat> batch = inputs;
    EvolveOptions o = opt;
    o.check_density = false;
    Stepper stepper(schedule, &collapse, o);
    stepper.run(batch, t0, t1);
    return batch;
}

Vec evolve_state(const Vec& psi0, const HamiltonianSchedule& schedule, double t0,
                 double t1, const EvolveOptions& opt) {
    std::vector<Mat> batch{psi0};
    Stepper stepper(schedule, nullptr, opt);
    stepper.run_states(batch, t0, t1);
    return batch.front().col(0);
}

Mat propagator(const HamiltonianSchedule& schedule, double t0, double t1,
               const EvolveOptions& opt) {
    std::vector<Mat> batch{Mat::Identity(schedule.dim(), schedule.dim())};
    Stepper stepper(schedule, nullptr, opt);
    stepper.run_states(batch, t0, t1);
    return batch.front();
}

} // namespace sizzle

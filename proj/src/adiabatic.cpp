#include "sizzle/adiabatic.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>

#include "sizzle/hamiltonian.hpp"

namespace sizzle {

std::vector<double> default_ramp_grid(const Envelope& env) {
    double ramp = envelope_total(env);
    if (const auto* r = std::get_if<RcftDragEnvelope>(&env)) ramp = r->ramp;
    const int n = std::max(24, static_cast<int>(std::ceil(ramp / 0.5)));
    std::vector<double> grid(n + 1);
    for (int k = 0; k <= n; ++k) grid[k] = ramp * double(k) / double(n);
    return grid;
}

AdiabaticReport adiabatic_coefficient(const TransmonSpec& transmon,
                                      const DriveTone& drive,
                                      const std::vector<double>& t_grid) {
    transmon.validate();
    if (t_grid.size() < 2) throw error("adiabatic_coefficient: grid too small");

    // Drive frame: carrier == frame makes H vary only through the envelope.
    SystemSpec sys;
    sys.transmons = {transmon};
    sys.frame_freq = drive.carrier_freq;
    DriveTone tone = drive;
    const int d = transmon.levels;

    const Mat a = destroy(d);
    const Mat quad_a = 0.5 * (a + Mat(a.adjoint()));
    const Mat quad_b = 0.5 * cplx(0.0, 1.0) * (a - Mat(a.adjoint()));
    HamiltonianSchedule sched(sys, {tone});

    // pairs (g,e), (g,f), (e,f), (e,h) as tracked-level indices
    static constexpr std::array<std::pair<int, int>, 4> pairs{
        {{0, 1}, {0, 2}, {1, 2}, {1, 3}}};
    static constexpr std::array<const char*, 4> names{"g-e", "g-f", "e-f", "e-h"};

    AdiabaticReport report;
    for (const auto* n : names) report.per_pair[n] = 0.0;

    Mat prev_vecs = Mat::Identity(d, d); // bare levels at zero amplitude
    std::vector<int> track(d);
    for (int k = 0; k < d; ++k) track[k] = k;

    for (double t : t_grid) {
        Eigen::SelfAdjointEigenSolver<Mat> es(sched.hamiltonian(t));
        const Mat& vecs = es.eigenvectors();
        const auto& vals = es.eigenvalues();

        // Track adiabatic branches by maximal overlap with the previous step.
        std::vector<int> assign(d, -1);
        std::vector<bool> used(d, false);
        for (int prev = 0; prev < d; ++prev) {
            int best = -1;
            double best_ov = -1.0;
            for (int k = 0; k < d; ++k) {
                if (used[k]) continue;
                const double ov = std::abs((prev_vecs.col(prev).adjoint() * vecs.col(k))(0, 0));
                if (ov > best_ov) {
                    best_ov = ov;
                    best = k;
                }
            }
            assign[prev] = best;
            used[best] = true;
        }
        std::vector<int> new_track(d);
        for (int level = 0; level < d; ++level) new_track[level] = assign[track[level]];
        // re-anchor the overlap reference
        Mat anchored(d, d);
        for (int prev = 0; prev < d; ++prev) anchored.col(prev) = vecs.col(assign[prev]);
        prev_vecs = anchored;
        track = new_track;

        const cplx dc = envelope_derivative(tone.envelope, t) *
                        std::exp(cplx(0.0, 1.0) * tone.phase_offset);
        const Mat hdot = dc.real() * quad_a + dc.imag() * quad_b;

        double a_total = 0.0;
        for (size_t p = 0; p < pairs.size(); ++p) {
            const int m = track[pairs[p].first];
            const int n = track[pairs[p].second];
            const double gap = std::abs(vals[m] - vals[n]);
            if (gap < 1e-12)
                throw pole_error("adiabatic_coefficient: degenerate pair " +
                                 std::string(names[p]) + " at the drive point");
            const double amn =
                std::abs((vecs.col(m).adjoint() * hdot * vecs.col(n))(0, 0)) / (gap * gap);
            report.per_pair[names[p]] = std::max(report.per_pair[names[p]], amn);
            a_total += amn;
        }
        report.a_total_max = std::max(report.a_total_max, a_total);
    }
    return report;
}

} // namespace sizzle

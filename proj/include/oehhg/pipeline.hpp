#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "oehhg/ground_state.hpp"
#include "oehhg/parallel.hpp"
#include "oehhg/propagate.hpp"
#include "oehhg/spectrum.hpp"
#include "oehhg/units.hpp"

// End-to-end single runs and parameter scans: ground state -> propagation ->
// spectrum -> even-to-odd ratio at the monitored cutoff-adjacent order.

namespace oehhg {

/// Everything needed for one TDSE run except the THz field value.
struct SimConfig {
    ProbePulse probe;
    AtomModel atom;
    GridSpec grid;
    AbsorberSpec absorber;
    WindowKind window = WindowKind::hann_flat_top;
    int monitored_order = 0;  // 0: largest even order below the cutoff law
    PropagateOptions prop;

    static SimConfig standard(const ProbePulse& probe, const AtomModel& atom, double dx = 0.2,
                              double dt = 0.05) {
        SimConfig c;
        c.probe = probe;
        c.atom = atom;
        c.grid = default_grid(probe, dx, dt);
        return c;
    }

    int resolve_monitored_order() const {
        if (monitored_order > 0) {
            if (monitored_order % 2 != 0)
                throw std::domain_error("SimConfig: monitored order must be even");
            return monitored_order;
        }
        return monitored_even_order(probe.e0, probe.omega0, atom.ip);
    }
};

namespace detail {

// Ground states keyed by atom + box so scan points over the same target
// reuse one imaginary-time solve.
class GroundStateCache {
  public:
    std::shared_ptr<const GroundState> get(const GridSpec& grid, const AtomModel& atom) {
        const Key key{atom.soft_core_a, atom.ip, grid.x_min, grid.x_max, grid.num_points};
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        auto gs = std::make_shared<const GroundState>(ground_state(grid, atom));
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = cache_.emplace(key, gs);
        return it->second;
    }

    static GroundStateCache& instance() {
        static GroundStateCache c;
        return c;
    }

  private:
    using Key = std::tuple<double, double, double, double, int>;
    std::map<Key, std::shared_ptr<const GroundState>> cache_;
    std::mutex mu_;
};

}  // namespace detail

inline std::shared_ptr<const GroundState> prepare_ground_state(const SimConfig& cfg) {
    return detail::GroundStateCache::instance().get(cfg.grid, cfg.atom);
}

/// Ground state + propagation under the given composite field.
inline DipoleSignal simulate_dipole(const SimConfig& cfg, const CompositeField& field) {
    auto gs = prepare_ground_state(cfg);
    return propagate(gs->wf, field, cfg.atom, cfg.grid, cfg.absorber, cfg.prop).signal;
}

struct EvenOddResult {
    double et = 0.0;     // applied THz field value, a.u.
    double gamma = 0.0;
    EvenOddPoint point;
};

/// One scan point: propagate with a quasi-static THz field value and read
/// eta at the monitored order.
inline EvenOddResult run_even_odd_static(const SimConfig& cfg, double et) {
    const CompositeField field = et == 0.0 ? CompositeField::probe_only(cfg.probe)
                                           : CompositeField::with_static(cfg.probe, et);
    const DipoleSignal sig = simulate_dipole(cfg, field);
    const HhgSpectrum spec = compute_spectrum(sig, cfg.window);
    EvenOddResult r;
    r.et = et;
    r.gamma = asymmetry_parameter(cfg.probe.e0, cfg.probe.omega0, std::abs(et));
    r.point = even_to_odd_ratio(spec, cfg.resolve_monitored_order());
    return r;
}

struct ScanTask {
    SimConfig sim;
    double et = 0.0;          // static THz field for this point
    double sweep_value = 0.0; // the swept coordinate, used for ordering/output
};

struct ScanPointOutcome {
    double sweep_value = 0.0;
    double et = 0.0;
    double gamma = 0.0;
    EvenOddPoint point;
    bool ok = false;
    std::string error;
};

/// Run every task, in parallel, tolerating per-point failures. Results come
/// back in task order.
inline std::vector<ScanPointOutcome> run_scan(const std::vector<ScanTask>& tasks,
                                              unsigned parallelism = 0) {
    std::vector<ScanPointOutcome> out(tasks.size());
    parallel_for(tasks.size(), parallelism, [&](std::size_t i) {
        const ScanTask& task = tasks[i];
        ScanPointOutcome& o = out[i];
        o.sweep_value = task.sweep_value;
        o.et = task.et;
        try {
            const EvenOddResult r = run_even_odd_static(task.sim, task.et);
            o.gamma = r.gamma;
            o.point = r.point;
            o.ok = true;
        } catch (const std::exception& e) {
            o.ok = false;
            o.error = e.what();
        }
    });
    return out;
}

/// Static-field sweep over one configuration.
inline std::vector<ScanPointOutcome> scan_static_field(const SimConfig& cfg,
                                                       const std::vector<double>& et_values,
                                                       unsigned parallelism = 0) {
    std::vector<ScanTask> tasks;
    tasks.reserve(et_values.size());
    for (double et : et_values) tasks.push_back({cfg, et, et});
    return run_scan(tasks, parallelism);
}

struct ConvergenceReport {
    double eta_coarse = 0.0;
    double eta_fine = 0.0;
    double rel_delta = 0.0;
    bool pass = false;
};

/// Repeat one eta measurement at (dx, dt) and (dx/2, dt/2); the run is
/// considered converged when eta moves by less than 5%.
inline ConvergenceReport convergence_probe(const SimConfig& cfg, double et) {
    SimConfig fine = cfg;
    fine.grid.num_points *= 2;
    fine.grid.dt *= 0.5;

    const EvenOddResult coarse = run_even_odd_static(cfg, et);
    const EvenOddResult refined = run_even_odd_static(fine, et);

    ConvergenceReport rep;
    rep.eta_coarse = coarse.point.eta;
    rep.eta_fine = refined.point.eta;
    if (std::abs(rep.eta_coarse) < 1e-12 && std::abs(rep.eta_fine) < 1e-12) {
        rep.rel_delta = 0.0;  // zero-field: nothing to resolve
    } else {
        rep.rel_delta = std::abs(rep.eta_coarse - rep.eta_fine) /
                        std::max(std::abs(rep.eta_fine), 1e-300);
    }
    rep.pass = rep.rel_delta < 0.05;
    return rep;
}

}  // namespace oehhg

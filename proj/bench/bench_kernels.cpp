#include <chrono>
#include <cstdio>
#include <vector>

#include "etype/geometry/tensor_engine.hpp"
#include "etype/kernels.hpp"
#include "etype/soliton/closed_form.hpp"
#include "etype/soliton/random_suite.hpp"
#include "etype/soliton/residuals.hpp"
#include "etype/warped/warped_metric.hpp"

using namespace etype;

namespace {

template <class Fn>
double seconds(Fn&& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %10.3f ms  parallel %10.3f ms  speedup %5.2fx\n", name, serial * 1e3,
              parallel * 1e3, serial / parallel);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", max_threads());

  const auto model = soliton::build_model(soliton::TheoremCase::rotational(1.5, -1.0, 1.0), 4,
                                          warped::Interval{0.1, 5.0});
  const auto grid = soliton::linspace(0.1, 5.0, 20000);
  auto key3 = [&](double r) { return soliton::key3_residual(model.metric, model.potential, model.c, r); };
  row("key3 residual, 20000 radii", seconds([&] { sweep_grid_serial(grid, key3); }, 5),
      seconds([&] { sweep_grid(grid, key3); }, 5));

  soliton::RandomSuiteOptions opt;
  opt.count = 12;
  const auto suite = soliton::random_potential_suite(opt);
  const auto sgrid = soliton::linspace(0.5, 2.0, 4000);
  double sink = 0.0;
  auto suite_sweep = [&](bool parallel) {
    for (const auto& inst : suite) {
      const warped::WarpedMetric w(warped::WarpingProfile::from_potential(inst.potential, inst.c),
                                   warped::FiberSpec::round_sphere(3));
      auto fn = [&](double r) { return soliton::key1_residual(w, inst.potential, inst.c, r); };
      const auto out = parallel ? sweep_grid(sgrid, fn) : sweep_grid_serial(sgrid, fn);
      sink += out.front();
    }
  };
  row("key1 over spline suite", seconds([&] { suite_sweep(false); }, 3), seconds([&] { suite_sweep(true); }, 3));

  const auto patch = warped::to_patch(model.metric, warped::FiberChart::s3_hyperspherical);
  std::vector<geom::Point> points;
  for (int i = 0; i < 64; ++i) {
    geom::Point x(4);
    x << 0.6 + 0.06 * i, 1.2, 1.1, 0.4;
    points.push_back(x);
  }
  row("FD curvature, 64 points", seconds([&] { geom::curvature_batch_serial(patch, points); }, 2),
      seconds([&] { geom::curvature_batch(patch, points); }, 2));
  return sink == 12345.0;
}

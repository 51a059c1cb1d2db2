#include <benchmark/benchmark.h>

#include <random>

#include "btevo/bt/dsl.hpp"
#include "btevo/bt/tick.hpp"
#include "btevo/eval/evaluator.hpp"
#include "btevo/evo/operators.hpp"
#include "btevo/vision/detector.hpp"
#include "btevo/vision/integral_image.hpp"
#include "btevo/vision/pipeline.hpp"
#include "btevo/vision/render.hpp"

namespace {

using namespace btevo;

const char* kSeeker =
    "(sel (seq (cond sigma < 55) (cond x < 0) (act r 0.5)) (seq (cond sigma < 55) (act r -0.5))"
    " (seq (cond Sigma > 0.07) (act r -1)) (act r -0.3))";

const vision::CameraPose kPose{4.0, 3.0, 1.5, 1.2};

void BM_TickGrownTree(benchmark::State& state) {
  evo::EAParams p;
  p.max_depth = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const auto tree = evo::grow(p, rng);
  bt::Blackboard bb{0.1, 60.0, 0.05, -0.2, 0.0};
  for (auto _ : state) {
    bb.x = -bb.x;
    benchmark::DoNotOptimize(bt::tick(tree, bb));
  }
  state.counters["nodes"] = double(tree.size());
}
BENCHMARK(BM_TickGrownTree)->Arg(2)->Arg(4)->Arg(6);

void BM_RenderDepth(benchmark::State& state) {
  const sim::RoomConfig room;
  const vision::CameraModel camera;
  vision::DepthImage depth;
  for (auto _ : state) {
    vision::render_depth(kPose, room, camera, depth);
    benchmark::DoNotOptimize(depth.pixels().data());
  }
}
BENCHMARK(BM_RenderDepth);

void BM_IntegralImage(benchmark::State& state) {
  const auto disparity = vision::to_disparity(vision::render_depth(kPose, sim::RoomConfig{}));
  vision::IntegralImage<double> ii;
  for (auto _ : state) {
    ii.build(disparity);
    benchmark::DoNotOptimize(ii.total());
  }
}
BENCHMARK(BM_IntegralImage);

void BM_DetectWindow(benchmark::State& state) {
  const auto disparity = vision::to_disparity(vision::render_depth(kPose, sim::RoomConfig{}));
  const vision::IntegralImage<double> ii(disparity);
  vision::DetectorParams params;
  params.stride = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vision::detect_window(ii, params));
}
BENCHMARK(BM_DetectWindow)->Arg(1)->Arg(2)->Arg(4);

void BM_SensePipeline(benchmark::State& state) {
  vision::VisionPipeline pipeline;
  const sim::RoomConfig room;
  for (auto _ : state) benchmark::DoNotOptimize(pipeline.sense(kPose, room));
}
BENCHMARK(BM_SensePipeline);

void BM_Episode(benchmark::State& state) {
  const auto tree = bt::parse(kSeeker).tree;
  eval::EvaluationContext ctx;
  const sim::InitialCondition init{4.0, 2.0, 1.3};
  for (auto _ : state) benchmark::DoNotOptimize(eval::fly(tree, init, ctx));
}
BENCHMARK(BM_Episode)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

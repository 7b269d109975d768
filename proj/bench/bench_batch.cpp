// Copyright 2026 The slstm Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial vs OpenMP minibatch forward/backward at the paper-scale network
// (28 inputs, 100 hidden units, 10 classes, batch of 32, 28 steps).
//
// usage: bench_batch [repetitions]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "slstm/bptt.hpp"
#include "slstm/rng.hpp"

using namespace slstm;

namespace {

SequenceBatch random_batch(std::size_t n, Rng& rng) {
  SequenceBatch b;
  for (std::size_t e = 0; e < n; ++e) {
    Sequence seq;
    for (int t = 0; t < 28; ++t) {
      Vector x(28);
      for (double& v : x.values()) v = rng.uniform();
      seq.push_back(std::move(x));
    }
    b.inputs.push_back(std::move(seq));
    b.labels.push_back(rng.below(10));
  }
  return b;
}

double time_it(const VariantSpec& spec, const CellParams& cell,
               const OutputHead& head, const SequenceBatch& batch, ExecMode mode,
               int reps, BatchResult* last) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r)
    *last = batch_loss_and_grads(spec, cell, head, batch, mode);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  return dt.count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 5;
  Rng rng(7, Stream::kGradCheck);
  const SequenceBatch batch = random_batch(32, rng);
  std::printf("threads=%d reps=%d\n", omp_get_max_threads(), reps);
  std::printf("%-8s %12s %12s %8s %s\n", "variant", "serial_ms", "parallel_ms",
              "speedup", "bitwise_equal");
  for (Variant v : kAllVariants) {
    const VariantSpec spec = VariantSpec::make(v, Activation::kTanh);
    const auto [cell, head] = init_params(spec, 28, 100, 10, 1);
    BatchResult serial{0.0, Gradients::zeros_like(cell, head), 0};
    BatchResult parallel = serial;
    const double ts = time_it(spec, cell, head, batch, ExecMode::kSerial, reps, &serial);
    const double tp =
        time_it(spec, cell, head, batch, ExecMode::kParallel, reps, &parallel);
    const bool same = serial.grads == parallel.grads &&
                      serial.mean_loss == parallel.mean_loss;
    std::printf("%-8s %12.3f %12.3f %8.2f %s\n", std::string(to_string(v)).c_str(),
                ts * 1e3, tp * 1e3, ts / tp, same ? "yes" : "NO");
  }
  return 0;
}

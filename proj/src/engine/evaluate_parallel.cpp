#include <omp.h>

#include "engine/internal.hpp"

namespace odq {

EvaluationResult evaluate_dataset(const Dataset& dataset, const DataObjectClass& object,
                                  const EvaluateOptions& options) {
  CompiledObject compiled(object, dataset.header());
  const std::size_t fields = object.fields.size();
  const auto rows = static_cast<std::int64_t>(dataset.record_count());
  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();

  std::vector<engine::Partial> partials(static_cast<std::size_t>(workers));
#pragma omp parallel num_threads(workers)
  {
    auto& local = partials[static_cast<std::size_t>(omp_get_thread_num())];
    local = engine::make_partial(fields);
#pragma omp for schedule(static)
    for (std::int64_t row = 0; row < rows; ++row) {
      RecordView r = dataset.record(static_cast<std::size_t>(row));
      compiled.evaluate(r, local.violations);
      engine::tally(compiled.impl(), r, local);
    }
  }

  auto merged = engine::make_partial(fields);
  for (auto& p : partials) {
    if (p.nulls.empty()) continue;
    merged.violations.insert(merged.violations.end(), std::make_move_iterator(p.violations.begin()),
                             std::make_move_iterator(p.violations.end()));
    for (std::size_t i = 0; i < fields; ++i) {
      merged.nulls[i] += p.nulls[i];
      merged.placeholders[i] += p.placeholders[i];
      for (auto& [value, n] : p.placeholder_values[i]) merged.placeholder_values[i][value] += n;
    }
  }
  return engine::finish(dataset, compiled, std::move(merged), options);
}

}  // namespace odq

#include "engine/internal.hpp"

namespace odq {

EvaluationResult evaluate_dataset_serial(const Dataset& dataset, const DataObjectClass& object,
                                         const EvaluateOptions& options) {
  CompiledObject compiled(object, dataset.header());
  auto partial = engine::make_partial(object.fields.size());
  for (std::size_t row = 0; row < dataset.record_count(); ++row) {
    RecordView r = dataset.record(row);
    compiled.evaluate(r, partial.violations);
    engine::tally(compiled.impl(), r, partial);
  }
  return engine::finish(dataset, compiled, std::move(partial), options);
}

}  // namespace odq

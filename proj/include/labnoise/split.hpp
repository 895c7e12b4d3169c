#pragma once

#include <array>
#include <vector>

#include "labnoise/rng.hpp"
#include "labnoise/types.hpp"

namespace labnoise {

/// Shuffles and partitions examples into train/validation/test, stratified by
/// clean_label so each split's class balance matches the source within one
/// example per class.
///
/// Throws std::invalid_argument if the fractions do not sum to 1 (tolerance
/// 1e-9), the input is empty, or any partition would come out empty.
DatasetSplit split_dataset(const std::vector<LabeledExample>& examples,
                           const std::array<double, 3>& fractions,
                           RngStream& rng);

}  // namespace labnoise

#pragma once

#include <string>
#include <vector>

#include "labnoise/rng.hpp"
#include "labnoise/types.hpp"

namespace labnoise {

/// Two isotropic Gaussian classes separated along the first feature axis.
/// class_separation is the distance between class means in units of the
/// shared standard deviation. The default is calibrated so a clean-label
/// logistic baseline lands in the low-0.9 AUC range.
struct SyntheticConfig {
  int n_examples = 800;
  int n_features = 16;
  double class_separation = 2.0;
  double positive_fraction = 0.5;
};

/// Generates n_examples with exactly round(positive_fraction * n) positives,
/// label order shuffled by rng. Positives sit at +separation/2 on feature 0,
/// negatives at -separation/2. stored_label starts equal to clean_label.
std::vector<LabeledExample> generate_synthetic(const SyntheticConfig& config,
                                               RngStream& rng);

/// Reads a dataset CSV. Special columns: `label` (required, the stored
/// label), `id` (ignored; ids are reassigned 0..N-1 in row order), and the
/// optional corruption pair `clean_label`/`prior_corrupted`. Every other
/// column is a feature, in header order. Errors cite the 1-based file line.
std::vector<LabeledExample> load_csv(const std::string& path);

/// Writes `id,label,f0,...,f{d-1}` rows ordered by id, reals in shortest
/// round-trip form. with_corruption_columns appends clean_label and
/// prior_corrupted (the corrupted-dataset schema).
void write_csv(const std::vector<LabeledExample>& examples,
               const std::string& path, bool with_corruption_columns = false);

}  // namespace labnoise

#pragma once

#include <string>
#include <utility>

#include "labnoise/model.hpp"

namespace labnoise {

/// Text checkpoint: a small header describing the architecture followed by
/// one shortest-round-trip parameter per line.
void save_checkpoint(const std::string& path, const ModelSpec& spec,
                     const ModelState<double>& state);

std::pair<ModelSpec, ModelState<double>> load_checkpoint(
    const std::string& path);

}  // namespace labnoise

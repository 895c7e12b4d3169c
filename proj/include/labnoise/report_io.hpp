#pragma once

#include <string>

#include "labnoise/trainer.hpp"

namespace labnoise {

/// Machine-readable report with the full config echo. Key order and number
/// formatting are deterministic, so identical runs serialize byte-identically.
std::string report_to_json(const TrainReport& report);

void write_report_json(const TrainReport& report, const std::string& path);

/// Human-readable per-epoch table:
/// epoch,train_loss,val_accuracy,n_cl_given_cl,n_cl_given_co,n_co_given_cl,n_co_given_co
void write_epoch_csv(const TrainReport& report, const std::string& path);

}  // namespace labnoise

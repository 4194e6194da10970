#ifndef QID_SERIALIZE_H
#define QID_SERIALIZE_H

#include <nlohmann/json.hpp>
#include <ostream>
#include <vector>

#include "qid/analytics.h"
#include "qid/detection.h"
#include "qid/montecarlo.h"
#include "qid/state_ops.h"
#include "qid/sym_optimizer.h"

namespace qid {

using json = nlohmann::json;

// {"d": int, "amps": [[re, im], ...]} in flat-index order.
json to_json(const StateVector &s);
StateVector state_from_json(const json &j);

// {"d": int, "dim": int, "triplets": [[i, j, re, im], ...]}, upper triangle only.
json to_json(const HermitianOperator &op);
HermitianOperator operator_from_json(const json &j);

// {"d": int, "scale": real, "elements": [{"n": int, "vectors": [StateVector, ...]}, ...]}.
json to_json(const Povm &povm);
Povm povm_from_json(const json &j);

json to_json(const ConfusionMatrix &cm);
json to_json(const VerificationReport &r);
json to_json(const ExperimentReport &r);
json to_json(const EigenOptimum &r, int d);
json to_json(const GridOptimum &r, int d, double resolution);

/// Header plus one row per trial: trial,truth,outcome,p_success,p_inconclusive.
/// The inconclusive outcome is written as "?".
void write_trials_csv(std::ostream &out, const std::vector<TrialRecord> &records);

}  // namespace qid

#endif

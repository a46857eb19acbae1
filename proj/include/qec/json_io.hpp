#ifndef QEC_JSON_IO_HPP
#define QEC_JSON_IO_HPP

#include <nlohmann/json_fwd.hpp>

#include "qec/corona_formula.hpp"
#include "qec/distance.hpp"
#include "qec/graph.hpp"
#include "qec/omega_psi.hpp"
#include "qec/qec_oracle.hpp"
#include "qec/spectral.hpp"
#include "qec/tolerances.hpp"

namespace qec {

// All floats are rounded to 12 significant digits before serialization;
// non-finite values map to null.
nlohmann::json json_number(double v);

nlohmann::json to_json(const Tolerances& t);
nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const DistanceMatrix& d);
nlohmann::json to_json(const SpectralData& sd, const MainEigenvalues& main);
nlohmann::json to_json(const QecResult& r);
nlohmann::json to_json(const OmegaPsi& op);
nlohmann::json to_json(const TheoremReport& r);
nlohmann::json to_json(const PairOutcome& o);
nlohmann::json to_json(const BatchSummary& s);

} // namespace qec

#endif

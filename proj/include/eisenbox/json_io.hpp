#pragma once

#include <json.hpp>

#include "eisenbox/dfinite.hpp"
#include "eisenbox/eisenstein.hpp"
#include "eisenbox/graded.hpp"
#include "eisenbox/puiseux.hpp"
#include "eisenbox/weierstrass.hpp"

namespace eisenbox {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "eisenbox/1";

// Every object carries "kind"; documents produced by to_json also carry
// "schema": "eisenbox/1". Rationals are strings "n" or "n/d". Integers are
// JSON numbers when they fit in 64 bits and decimal strings otherwise.
// Term lists follow grlex order. from_json reports schema violations as
// InputError "schema_error" with a JSON path such as "$.terms[2].c".

Json to_json(const MPoly& p);
Json to_json(const WeightVector& w);
Json to_json(const TSeries& f);
Json to_json(const PuiseuxSeries& f);
Json to_json(const GradedSeries& g);
Json to_json(const EisensteinCertificate& c);
Json to_json(const PRecurrence& r);
Json to_json(const Cone& c);

Json to_json(const NewtonPolygon& p);
Json to_json(const PuiseuxResult& r);
Json to_json(const VerifyResult& r);
Json to_json(const VerifyMultiResult& r);
Json to_json(const MultiCertificate& c);
Json to_json(const DenominatorProfile& p);
Json to_json(const SearchResult& r);
Json to_json(const WeakEisensteinReport& r);
Json to_json(const MonomialMap& m);
Json to_json(const LinearODE& ode);
Json to_json(const GrowthReport& r);
Json to_json(const PadicProfile& p);
Json to_json(const Preparation& p);
Json to_json(const Division& d);

template <class T>
T from_json(const Json& j);

template <> MPoly from_json<MPoly>(const Json& j);
template <> WeightVector from_json<WeightVector>(const Json& j);
template <> TSeries from_json<TSeries>(const Json& j);
template <> PuiseuxSeries from_json<PuiseuxSeries>(const Json& j);
template <> GradedSeries from_json<GradedSeries>(const Json& j);
template <> EisensteinCertificate from_json<EisensteinCertificate>(const Json& j);
template <> PRecurrence from_json<PRecurrence>(const Json& j);
template <> Cone from_json<Cone>(const Json& j);
template <> LinearODE from_json<LinearODE>(const Json& j);

}  // namespace eisenbox

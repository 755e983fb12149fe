#pragma once

// JSON views of certificates and sub-certificates. Field order is fixed so
// that identical inputs give byte-identical documents.

#include "xsb/ladder.hpp"

#include <json.hpp>

namespace xsb {

using Json = nlohmann::ordered_json;

Json to_json(const Space& s);
Json to_json(const ConditionReport& r);
Json to_json(const ProductVerdict& v);
Json to_json(const TrilinearExponents& t);
Json to_json(const NullFormEstimate& n);
Json to_json(const NullFormCertificate& c);
Json to_json(const AngleSearchResult& r);
Json to_json(const Certificate& c);

} // namespace xsb

#ifndef HTG_CERTIFICATE_HPP
#define HTG_CERTIFICATE_HPP

#include <string>

#include <htg/factor.hpp>

namespace htg {

/// Schema:
/// {"params":{"m":..,"n":..,"ell":..},
///  "pair":[[i,j],[i,j]],
///  "edges":[[[i,j],[i,j]],...],
///  "provenance":"..."}
std::string encode_certificate(const SeparationCertificate& cert);

/// Parses and re-verifies against a freshly built graph: the edge list must
/// form a two-cycle 2-factor separating the pair.  Throws SchemaError for
/// malformed documents and VerificationFailed for tampered edge lists.
SeparationCertificate decode_certificate(const std::string& text);

std::string params_to_json(const HtgParams& params);
HtgParams params_from_json(const std::string& text);

}  // namespace htg

#endif

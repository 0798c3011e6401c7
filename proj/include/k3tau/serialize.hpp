#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "k3tau/conditions.hpp"
#include "k3tau/hilbert.hpp"
#include "k3tau/lattice.hpp"
#include "k3tau/pell.hpp"
#include "k3tau/tau.hpp"

namespace k3tau {

// Keys are sorted (std::map backed), so dump() is canonical.
using Json = nlohmann::json;

/// Numbers when they fit in 64 bits, decimal strings otherwise.
Json integer_json(const Integer& n);
Integer integer_from_json(const Json& j);

Json matrix_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {rank, gram, labels}
Json lattice_json(const Lattice& l);
Lattice lattice_from_json(const Json& j);
/// The lattice object plus "matrix".
Json isometry_json(const Isometry& g);
Isometry isometry_from_json(const Json& j);

Json mukai_json(const MukaiVector& v);
MukaiVector mukai_from_json(const Json& j);

Json classification_json(const DClassification& c);
Json hilb_json(const HilbVerdict& v);
Json pell_json(const PellWitness& w);
Json affine_json(const AffineWitness& w);
Json certificate_json(const TauCertificate& c);

/// Re-derives every identity of a certificate from its JSON alone. Empty when all hold.
std::vector<std::string> recheck_certificate(const Json& j);

/// dump(2) with a trailing newline.
std::string dump(const Json& j);

}  // namespace k3tau

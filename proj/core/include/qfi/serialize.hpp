#ifndef QFI_SERIALIZE_HPP
#define QFI_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "qfi/binary_form.hpp"
#include "qfi/class_number.hpp"
#include "qfi/principality.hpp"
#include "qfi/quadratic_field.hpp"

namespace qfi {

using Json = nlohmann::ordered_json;

/* Values that may exceed 64 bits are written as decimal strings. */
Json to_json(BigInt const & x);
Json to_json(QuadraticField const & field);
Json to_json(QuadraticInteger const & x);
Json to_json(BinaryForm const & f);
Json to_json(Representation const & r);
Json to_json(PellSolution const & s);
Json to_json(SplittingType const & t);
Json to_json(SplitPrimeIdeal const & P);
Json to_json(GeneratorAudit const & a);
Json to_json(Derivation const & d);
Json to_json(PrincipalityResult const & r);
Json to_json(Evidence const & e);
Json to_json(H1Certificate const & c);

BinaryForm form_from_json(Json const & j);
Evidence evidence_from_json(Json const & j);
H1Certificate certificate_from_json(Json const & j);

} // namespace qfi

#endif

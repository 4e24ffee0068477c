#pragma once

#include <string>
#include <variant>
#include <vector>

#include "stablab/presentation.hpp"

namespace stablab {

/// One factor conjugator * r_index^sign * conjugator^-1 of a normal-closure
/// product.
struct CertificateFactor {
  Word conjugator;
  std::size_t relator = 0;
  int sign = +1;
};

/// Witness that a word lies in the normal closure of the relators.
struct NormalClosureCertificate {
  std::vector<CertificateFactor> factors;
};

/// Freely reduced product of the factors.
Word certificate_product(const NormalClosureCertificate& cert, const Presentation& p);

/// True iff the reduced product equals `target` letter for letter.
/// Throws CertificateError on an out-of-range relator index.
bool verify_certificate(const NormalClosureCertificate& cert, const Word& target,
                        const Presentation& p);

/// For every generator of the target presentation, a word over the source
/// presentation's generators. Applying it to an assignment on the source
/// gives an assignment on the target.
struct TransportMap {
  std::size_t source_generators = 0;
  std::vector<Word> images;

  static TransportMap identity(std::size_t generators);
  friend bool operator==(const TransportMap&, const TransportMap&) = default;
};

/// first: A -> B, then: B -> C; result: A -> C.
TransportMap compose(const TransportMap& first, const TransportMap& then);

namespace tietze {

struct AddRelator {
  Word relator;
  NormalClosureCertificate certificate;  // over the existing relators
};

struct RemoveRelator {
  std::size_t index = 0;
  NormalClosureCertificate certificate;  // must not reference `index`
};

struct AddGenerator {
  std::string name;
  Word definition;  // over the existing generators
};

struct RemoveGenerator {
  std::uint32_t generator = 0;
  std::size_t relator = 0;  // the only relator mentioning `generator`
};

}  // namespace tietze

using TietzeMove = std::variant<tietze::AddRelator, tietze::RemoveRelator,
                                tietze::AddGenerator, tietze::RemoveGenerator>;

struct TietzeResult {
  Presentation presentation;
  TransportMap forward;   // old -> new
  TransportMap backward;  // new -> old
};

/// Applies one move. Relators are appended at the end; AddGenerator appends
/// the generator and its defining relator g * w^-1. RemoveGenerator accepts
/// any relator in which the generator occurs exactly once (up to cyclic
/// rotation it reads g^e * u, so g = u^-e).
/// Throws CertificateError when a certificate or precondition fails.
TietzeResult apply_tietze(const Presentation& p, const TietzeMove& move);

/// Applies a sequence of moves, composing the transports.
TietzeResult apply_tietze(const Presentation& p, const std::vector<TietzeMove>& moves);

}  // namespace stablab

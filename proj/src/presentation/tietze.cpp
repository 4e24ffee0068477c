#include "stablab/tietze.hpp"

#include "stablab/errors.hpp"

namespace stablab {

Word certificate_product(const NormalClosureCertificate& cert, const Presentation& p) {
  std::vector<Letter> product;
  for (const auto& f : cert.factors) {
    if (f.relator >= p.relator_count())
      throw CertificateError("certificate references relator " + std::to_string(f.relator) +
                             " but the presentation has " +
                             std::to_string(p.relator_count()));
    if (f.conjugator.generator_bound() > p.generator_count())
      throw CertificateError("certificate conjugator uses an unknown generator");
    const Word& r = p.relators()[f.relator];
    const Word term = concat_reduced(concat_reduced(f.conjugator, f.sign < 0 ? inverse_word(r) : r),
                                     inverse_word(f.conjugator));
    product.insert(product.end(), term.letters().begin(), term.letters().end());
  }
  return free_reduce(product);
}

bool verify_certificate(const NormalClosureCertificate& cert, const Word& target,
                        const Presentation& p) {
  return certificate_product(cert, p) == target;
}

TransportMap TransportMap::identity(std::size_t generators) {
  TransportMap t;
  t.source_generators = generators;
  for (std::size_t i = 0; i < generators; ++i)
    t.images.push_back(Word::generator(static_cast<std::uint32_t>(i)));
  return t;
}

TransportMap compose(const TransportMap& first, const TransportMap& then) {
  if (then.source_generators != first.images.size())
    throw PreconditionError("transport maps do not compose");
  TransportMap out;
  out.source_generators = first.source_generators;
  for (const auto& w : then.images) out.images.push_back(substitute(w, first.images));
  return out;
}

namespace {

Word shift_down(const Word& w, std::uint32_t removed) {
  std::vector<Letter> out;
  for (const auto& l : w.letters())
    out.push_back({l.generator > removed ? l.generator - 1 : l.generator, l.sign});
  return Word(std::move(out));
}

TietzeResult apply(const Presentation& p, const tietze::AddRelator& m) {
  if (m.relator.empty()) throw CertificateError("cannot add the empty relator");
  if (m.relator.generator_bound() > p.generator_count())
    throw CertificateError("added relator uses an unknown generator");
  if (!verify_certificate(m.certificate, m.relator, p))
    throw CertificateError("certificate does not express the added relator");
  auto relators = p.relators();
  relators.push_back(m.relator);
  const auto id = TransportMap::identity(p.generator_count());
  return {Presentation(p.generators(), std::move(relators)), id, id};
}

TietzeResult apply(const Presentation& p, const tietze::RemoveRelator& m) {
  if (m.index >= p.relator_count()) throw CertificateError("relator index out of range");
  for (const auto& f : m.certificate.factors)
    if (f.relator == m.index)
      throw CertificateError("certificate for a removed relator may not use that relator");
  if (!verify_certificate(m.certificate, p.relators()[m.index], p))
    throw CertificateError("certificate does not express the removed relator");
  auto relators = p.relators();
  relators.erase(relators.begin() + static_cast<std::ptrdiff_t>(m.index));
  const auto id = TransportMap::identity(p.generator_count());
  return {Presentation(p.generators(), std::move(relators)), id, id};
}

TietzeResult apply(const Presentation& p, const tietze::AddGenerator& m) {
  if (!is_identifier(m.name)) throw CertificateError("invalid generator name '" + m.name + "'");
  if (p.find_generator(m.name)) throw CertificateError("generator '" + m.name + "' exists");
  if (m.definition.generator_bound() > p.generator_count())
    throw CertificateError("definition uses an unknown generator");
  const auto g = static_cast<std::uint32_t>(p.generator_count());
  auto generators = p.generators();
  generators.push_back(m.name);
  auto relators = p.relators();
  relators.push_back(concat_reduced(Word::generator(g), inverse_word(m.definition)));

  TietzeResult out{Presentation(std::move(generators), std::move(relators)),
                   TransportMap::identity(p.generator_count()),
                   TransportMap::identity(p.generator_count() + 1)};
  out.forward.images.push_back(m.definition);
  out.backward.images.pop_back();
  return out;
}

TietzeResult apply(const Presentation& p, const tietze::RemoveGenerator& m) {
  if (m.generator >= p.generator_count()) throw CertificateError("generator index out of range");
  if (m.relator >= p.relator_count()) throw CertificateError("relator index out of range");
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    const std::size_t count = p.relators()[i].occurrences(m.generator);
    if (i == m.relator && count != 1)
      throw CertificateError("generator must occur exactly once in its defining relator");
    if (i != m.relator && count != 0)
      throw CertificateError("generator occurs in relator " + std::to_string(i));
  }
  // Rotate so the word reads g^e * u; then g = u^-e.
  const Word& r = p.relators()[m.relator];
  std::size_t at = 0;
  while (r[at].generator != m.generator) ++at;
  const int e = r[at].sign;
  const Word rotated = rotate(r, at);
  const Word rest(std::vector<Letter>(rotated.letters().begin() + 1, rotated.letters().end()));
  const Word value = e > 0 ? inverse_word(rest) : rest;

  std::vector<std::string> generators;
  for (std::uint32_t i = 0; i < p.generator_count(); ++i)
    if (i != m.generator) generators.push_back(p.generators()[i]);
  std::vector<Word> relators;
  for (std::size_t i = 0; i < p.relator_count(); ++i)
    if (i != m.relator) relators.push_back(shift_down(p.relators()[i], m.generator));

  TietzeResult out;
  out.presentation = Presentation(std::move(generators), std::move(relators));
  out.forward.source_generators = p.generator_count();
  for (std::uint32_t i = 0; i < p.generator_count(); ++i)
    if (i != m.generator) out.forward.images.push_back(Word::generator(i));
  out.backward.source_generators = p.generator_count() - 1;
  for (std::uint32_t i = 0; i < p.generator_count(); ++i)
    out.backward.images.push_back(i == m.generator ? shift_down(value, m.generator)
                                                   : Word::generator(i > m.generator ? i - 1 : i));
  return out;
}

}  // namespace

TietzeResult apply_tietze(const Presentation& p, const TietzeMove& move) {
  return std::visit([&p](const auto& m) { return apply(p, m); }, move);
}

TietzeResult apply_tietze(const Presentation& p, const std::vector<TietzeMove>& moves) {
  TietzeResult acc{p, TransportMap::identity(p.generator_count()),
                   TransportMap::identity(p.generator_count())};
  for (const auto& move : moves) {
    TietzeResult step = apply_tietze(acc.presentation, move);
    acc.forward = compose(acc.forward, step.forward);
    acc.backward = compose(step.backward, acc.backward);
    acc.presentation = std::move(step.presentation);
  }
  return acc;
}

}  // namespace stablab

#include <algorithm>
#include <limits>

#include "stablab/errors.hpp"
#include "stablab/stability.hpp"

namespace stablab {
namespace {

struct ElementPool {
  std::size_t n = 0;
  std::vector<std::vector<std::uint8_t>> forward;
  std::vector<std::vector<std::uint8_t>> backward;
};

ElementPool make_pool(const MetricDescriptor& desc) {
  ElementPool pool;
  pool.n = desc.degree;
  for (const auto& g : enumerate_elements(desc)) {
    const auto images = g.permutation().images();
    std::vector<std::uint8_t> f(images.begin(), images.end()), b(images.size());
    for (std::size_t j = 0; j < f.size(); ++j) b[f[j]] = static_cast<std::uint8_t>(j);
    pool.forward.push_back(std::move(f));
    pool.backward.push_back(std::move(b));
  }
  return pool;
}

bool relator_holds(const Word& r, const std::vector<std::size_t>& choice, const ElementPool& pool) {
  const auto letters = r.letters();
  for (std::size_t j = 0; j < pool.n; ++j) {
    auto x = static_cast<std::uint8_t>(j);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      const std::size_t e = choice[it->generator];
      x = it->sign > 0 ? pool.forward[e][x] : pool.backward[e][x];
    }
    if (x != j) return false;
  }
  return true;
}

}  // namespace

HomomorphismTable::HomomorphismTable(PresentationPtr p, const MetricDescriptor& desc,
                                     const EnumerationCaps& caps)
    : presentation_(std::move(p)), desc_(desc), generators_(presentation_->generator_count()) {
  desc_.validate();
  if (desc_.is_unitary())
    throw CapExceeded("homomorphisms can only be enumerated into symmetric groups");
  if (desc_.degree > caps.max_degree || desc_.degree > kMaxEnumerationDegree)
    throw CapExceeded("Sym(" + std::to_string(desc_.degree) + ") exceeds the degree cap " +
                      std::to_string(std::min(caps.max_degree, kMaxEnumerationDegree)));
  if (generators_ > caps.max_generators)
    throw CapExceeded(std::to_string(generators_) + " generators exceed the cap " +
                      std::to_string(caps.max_generators));

  const ElementPool pool = make_pool(desc_);

  // Relators bucketed by the last generator they mention.
  std::vector<std::vector<const Word*>> due(generators_);
  for (const auto& r : presentation_->relators()) due[r.generator_bound() - 1].push_back(&r);

  std::vector<std::size_t> choice(generators_, 0);
  auto emit = [&] {
    for (std::size_t s = 0; s < generators_; ++s) {
      const auto& f = pool.forward[choice[s]];
      images_.insert(images_.end(), f.begin(), f.end());
    }
    ++count_;
  };

  if (generators_ == 0) {
    emit();
    return;
  }
  // Iterative depth-first search over choice[0..k-1].
  std::size_t level = 0;
  choice[0] = 0;
  while (true) {
    bool ok = true;
    for (const Word* r : due[level])
      if (!relator_holds(*r, choice, pool)) {
        ok = false;
        break;
      }
    if (ok && level + 1 == generators_) emit();
    if (ok && level + 1 < generators_) {
      choice[++level] = 0;
      continue;
    }
    // Advance to the next candidate, backtracking as needed.
    while (true) {
      if (++choice[level] < pool.forward.size()) break;
      if (level == 0) return;
      --level;
    }
  }
}

AlmostHom HomomorphismTable::at(std::size_t index) const {
  const std::size_t n = desc_.degree;
  std::vector<GroupElement> assignment;
  assignment.reserve(generators_);
  for (std::size_t s = 0; s < generators_; ++s) {
    const auto* base = images_.data() + (index * generators_ + s) * n;
    assignment.emplace_back(desc_, Permutation(std::vector<std::uint32_t>(base, base + n)));
  }
  return AlmostHom(presentation_, desc_, std::move(assignment));
}

std::vector<AlmostHom> HomomorphismTable::all() const {
  std::vector<AlmostHom> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) out.push_back(at(i));
  return out;
}

std::pair<std::size_t, double> HomomorphismTable::nearest(const AlmostHom& phi) const {
  if (!(phi.descriptor() == desc_) || phi.assignment().size() != generators_)
    throw MismatchError("assignment does not match the homomorphism table");
  const std::size_t n = desc_.degree;
  std::vector<std::uint8_t> target;
  target.reserve(generators_ * n);
  for (const auto& g : phi.assignment()) {
    const auto images = g.permutation().images();
    target.insert(target.end(), images.begin(), images.end());
  }
  std::size_t best = 0;
  std::size_t best_count = std::numeric_limits<std::size_t>::max();
  for (std::size_t h = 0; h < count_ && best_count > 0; ++h) {
    const auto* row = images_.data() + h * generators_ * n;
    std::size_t worst = 0;
    for (std::size_t s = 0; s < generators_ && worst < best_count; ++s) {
      std::size_t c = 0;
      for (std::size_t j = 0; j < n; ++j) c += row[s * n + j] != target[s * n + j];
      worst = std::max(worst, c);
    }
    if (worst < best_count) {
      best_count = worst;
      best = h;
    }
  }
  return {best, static_cast<double>(best_count) / static_cast<double>(n)};
}

std::vector<AlmostHom> enumerate_homomorphisms(PresentationPtr p, const MetricDescriptor& desc,
                                               const EnumerationCaps& caps) {
  return HomomorphismTable(std::move(p), desc, caps).all();
}

HomDistResult homdist_exact(const AlmostHom& phi, const HomomorphismTable& table) {
  const auto [index, value] = table.nearest(phi);
  return HomDistResult{value, table.at(index), HomDistMethod::Exact, 0};
}

HomDistResult homdist_exact(const AlmostHom& phi, const EnumerationCaps& caps) {
  return homdist_exact(phi, HomomorphismTable(phi.presentation_ptr(), phi.descriptor(), caps));
}

}  // namespace stablab

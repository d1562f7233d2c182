#include "fsig/tower.hpp"

#include "fsig/errors.hpp"
#include "fsig/frobenius.hpp"

namespace fsig {

IdealTower::IdealTower(Kind kind, RingPtr ring, std::vector<Polynomial> canonical,
                       std::vector<Polynomial> params, Polynomial u1, std::string label)
    : kind_(kind),
      ring_(std::move(ring)),
      canonical_(std::move(canonical)),
      params_(std::move(params)),
      u1_(std::move(u1)),
      label_(std::move(label)),
      memo_(std::make_shared<Memo>()) {
  if (params_.empty()) throw ValidationError("tower needs at least one parameter");
}

IdealTower IdealTower::parameter(RingPtr ring, std::vector<Polynomial> params, Polynomial u1,
                                 std::string label) {
  return IdealTower(Kind::Parameter, std::move(ring), {}, std::move(params), std::move(u1),
                    std::move(label));
}

IdealTower IdealTower::qgorenstein(RingPtr ring, std::vector<Polynomial> canonical,
                                   std::vector<Polynomial> params, Polynomial u1,
                                   std::string label) {
  if (canonical.empty()) throw ValidationError("canonical ideal needs generators");
  return IdealTower(Kind::QGorenstein, std::move(ring), std::move(canonical), std::move(params),
                    std::move(u1), std::move(label));
}

Ideal IdealTower::ideal(unsigned t) const {
  if (t == 0) throw DomainError("tower index starts at 1");
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->ideals.find(t);
    if (it != memo_->ideals.end()) return it->second;
  }
  std::vector<Polynomial> gens;
  std::size_t first = 0;
  if (kind_ == Kind::QGorenstein) {
    Polynomial lead = params_[0].pow(t - 1);
    for (const Polynomial& g : canonical_) gens.push_back(lead * g);
    first = 1;
  }
  for (std::size_t i = first; i < params_.size(); ++i) gens.push_back(params_[i].pow(t));
  Ideal result(ring_, std::move(gens));
  std::lock_guard lock(memo_->mutex);
  return memo_->ideals.emplace(t, std::move(result)).first->second;
}

Polynomial IdealTower::socle_representative(unsigned t) const {
  if (t == 0) throw DomainError("tower index starts at 1");
  Polynomial prod = ring_->one();
  for (const Polynomial& x : params_) prod = prod * x;
  return prod.pow(t - 1) * u1_;
}

Ideal IdealTower::splitting_colon(unsigned t, std::uint64_t q) const {
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->colons.find({t, q});
    if (it != memo_->colons.end()) return it->second;
  }
  Ideal result = fsig::splitting_colon(ideal(t), socle_representative(t), q);
  std::lock_guard lock(memo_->mutex);
  return memo_->colons.emplace(std::make_pair(t, q), std::move(result)).first->second;
}

}  // namespace fsig

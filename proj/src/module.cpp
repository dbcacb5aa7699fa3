#include "flagdegen/module.hpp"

#include "flagdegen/linalg.hpp"

#include <deque>
#include <set>

namespace flagdegen {

Depth shifted(Depth nu, int i, int by) {
  nu[i] += by;
  return nu;
}

namespace {

bool nonnegative(const Depth& nu) {
  for (int x : nu)
    if (x < 0) return false;
  return true;
}

}  // namespace

IrreducibleModule::IrreducibleModule(Eigen::MatrixXi cartan, Eigen::VectorXi highest_weight)
    : cartan_(std::move(cartan)), lambda_(std::move(highest_weight)) {
  if (cartan_.rows() != cartan_.cols() || lambda_.size() != cartan_.rows())
    throw DomainError("highest weight does not match the Cartan matrix");
  for (Eigen::Index i = 0; i < lambda_.size(); ++i)
    if (lambda_[i] < 0) throw DomainError("highest weight must be dominant");
  WeightSpace top;
  top.dim = 1;
  top.gram = RatMat::Identity(1, 1);
  for (int i = 0; i < rank(); ++i) {
    top.e.push_back(RatMat(0, 1));
    top.f_into.push_back(RatMat(1, 0));
  }
  spaces_.emplace(Depth(rank(), 0), std::move(top));
}

int IrreducibleModule::coroot_pairing(const Depth& nu, int i) const {
  int value = lambda_[i];
  for (int k = 0; k < rank(); ++k) value -= nu[k] * cartan_(k, i);
  return value;
}

const IrreducibleModule::WeightSpace& IrreducibleModule::space(const Depth& nu) {
  if (!nonnegative(nu)) return zero_;
  auto it = spaces_.find(nu);
  if (it == spaces_.end()) {
    build(nu);
    it = spaces_.find(nu);
  }
  return it->second;
}

void IrreducibleModule::build(const Depth& nu) {
  const int n = rank();
  std::vector<const WeightSpace*> below(n, nullptr);
  std::vector<Eigen::Index> offset(n, 0);
  Eigen::Index total = 0;
  for (int j = 0; j < n; ++j) {
    if (nu[j] == 0) continue;
    below[j] = &space(shifted(nu, j, -1));
    offset[j] = total;
    total += below[j]->dim;
  }

  std::vector<RatVec> images;
  std::vector<std::pair<int, Eigen::Index>> image_origin;
  for (int i = 0; i < n; ++i) {
    if (!below[i] || below[i]->dim == 0) continue;
    const WeightSpace& src = *below[i];
    const int h = coroot_pairing(shifted(nu, i, -1), i);
    RatMat block = RatMat::Zero(total, src.dim);
    for (int j = 0; j < n; ++j) {
      if (!below[j] || below[j]->dim == 0) continue;
      RatMat part = RatMat::Zero(below[j]->dim, src.dim);
      if (src.e[j].rows() > 0) part = below[j]->f_into[i] * src.e[j];
      if (i == j)
        for (Eigen::Index b = 0; b < src.dim; ++b) part(b, b) += h;
      block.block(offset[j], 0, below[j]->dim, src.dim) = part;
    }
    for (Eigen::Index b = 0; b < src.dim; ++b) {
      images.push_back(block.col(b));
      image_origin.emplace_back(i, b);
    }
  }

  IncrementalBasis<Rational> basis(total);
  WeightSpace ws;
  std::vector<Eigen::Index> chosen;
  for (std::size_t c = 0; c < images.size(); ++c)
    if (basis.insert(images[c])) {
      chosen.push_back(static_cast<Eigen::Index>(c));
      ws.origin.push_back(image_origin[c]);
    }
  ws.dim = basis.rank();

  ws.f_into.resize(n);
  ws.e.resize(n);
  for (int i = 0; i < n; ++i) {
    Eigen::Index source_dim = below[i] ? below[i]->dim : 0;
    ws.f_into[i] = RatMat::Zero(ws.dim, source_dim);
    ws.e[i] = RatMat::Zero(source_dim, ws.dim);
  }
  for (std::size_t c = 0; c < images.size(); ++c) {
    auto coords = basis.coordinates(images[c]);
    if (!coords) throw std::logic_error("weight space image outside its own span");
    ws.f_into[image_origin[c].first].col(image_origin[c].second) = *coords;
  }
  for (Eigen::Index k = 0; k < ws.dim; ++k) {
    const RatVec& tuple = images[chosen[k]];
    for (int j = 0; j < n; ++j)
      if (below[j] && below[j]->dim > 0) ws.e[j].col(k) = tuple.segment(offset[j], below[j]->dim);
  }

  ws.gram = RatMat::Zero(ws.dim, ws.dim);
  std::vector<RatMat> lifted(n);
  for (int i = 0; i < n; ++i)
    if (below[i] && below[i]->dim > 0 && ws.dim > 0) lifted[i] = below[i]->gram * ws.e[i];
  for (Eigen::Index k = 0; k < ws.dim; ++k) ws.gram.row(k) = lifted[ws.origin[k].first].row(ws.origin[k].second);

  spaces_.emplace(nu, std::move(ws));
}

const RatMat& IrreducibleModule::f_block(int i, const Depth& source) {
  const Depth target = shifted(source, i, 1);
  if (!nonnegative(source)) return empty_;
  space(source);
  return space(target).f_into[i];
}

const RatMat& IrreducibleModule::e_block(int i, const Depth& source) {
  if (!nonnegative(source)) return empty_;
  return space(source).e[i];
}

std::vector<Depth> IrreducibleModule::support() {
  std::vector<Depth> out;
  std::set<Depth> seen;
  std::deque<Depth> queue{Depth(rank(), 0)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Depth nu = queue.front();
    queue.pop_front();
    if (space(nu).dim == 0) continue;
    out.push_back(nu);
    for (int i = 0; i < rank(); ++i) {
      Depth next = shifted(nu, i, 1);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return out;
}

}  // namespace flagdegen

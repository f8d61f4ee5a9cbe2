#include "sdsig/trees.hpp"

#include <algorithm>
#include <bit>

namespace sdsig {

namespace {

constexpr uint32_t kMaxLevel = 15;
constexpr uint32_t kMaxIndex = 4095;

void check_index_set(const IndexSet& s, size_t m) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= m) throw ParamError("index out of range");
    if (i && s[i] <= s[i - 1]) throw ParamError("index set must be sorted and distinct");
  }
}

size_t count_in(const IndexSet& s, size_t lo, size_t hi) {
  auto a = std::lower_bound(s.begin(), s.end(), lo);
  auto b = std::lower_bound(a, s.end(), hi);
  return static_cast<size_t>(b - a);
}

void cover_rec(size_t m, size_t depth, const IndexSet& ex, uint32_t level, uint32_t index,
               std::vector<NodePos>& out) {
  const size_t span = size_t{1} << (depth - level);
  const size_t lo = index * span;
  if (lo >= m) return;
  const size_t hi = std::min(m, lo + span);
  if (count_in(ex, lo, hi) == 0) {
    out.push_back({level, index});
    return;
  }
  if (level == depth) return;
  cover_rec(m, depth, ex, level + 1, 2 * index, out);
  cover_rec(m, depth, ex, level + 1, 2 * index + 1, out);
}

Seed child_seed(const Seed& parent, uint32_t level, uint32_t index) {
  return derive_seed(parent, {index & 1 ? Ctx::kChildRight : Ctx::kChildLeft, level, index});
}

void check_positions(const std::vector<NodePos>& want, const std::vector<NodePos>& got) {
  if (want != got) throw ProofError("proof does not have the canonical shape");
}

uint16_t pack_pos(const NodePos& p) {
  if (p.level > kMaxLevel || p.index > kMaxIndex) throw ParamError("tree position exceeds wire format");
  return static_cast<uint16_t>(p.level << 12 | p.index);
}

NodePos unpack_pos(uint16_t v) { return {uint32_t{v} >> 12, uint32_t{v} & 0xfffu}; }

Commitment leaf_hash(uint32_t i, const Commitment& c) {
  Commitment out;
  Shake256 h;
  h.update(DomainTag{Ctx::kMerkleLeaf, i}).update(c);
  h.finish(out.data(), out.size());
  return out;
}

Commitment node_hash(uint32_t level, uint32_t index, const Commitment& l, const Commitment* r) {
  Commitment out;
  Shake256 h;
  h.update(DomainTag{Ctx::kMerkleNode, level, index}).update(l);
  if (r) h.update(*r);
  h.finish(out.data(), out.size());
  return out;
}

}  // namespace

std::vector<NodePos> cover_positions(size_t m, size_t depth, const IndexSet& excluded) {
  check_index_set(excluded, m);
  std::vector<NodePos> out;
  cover_rec(m, depth, excluded, 0, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

size_t SeedTree::depth_for(size_t m) {
  if (m == 0) throw ParamError("seed tree needs at least one leaf");
  return std::max<size_t>(1, std::bit_width(m - 1));
}

SeedTree::SeedTree(const Seed& root, size_t m) : m_(m), depth_(depth_for(m)) {
  if (depth_ > kMaxLevel || m > kMaxIndex + 1) throw ParamError("seed tree too large");
  levels_.resize(depth_ + 1);
  levels_[0] = {root};
  for (size_t l = 1; l <= depth_; ++l) {
    const size_t span = size_t{1} << (depth_ - l);
    const size_t count = (m + span - 1) / span;
    levels_[l].resize(count);
    for (size_t j = 0; j < count; ++j)
      levels_[l][j] = child_seed(levels_[l - 1][j / 2], static_cast<uint32_t>(l), static_cast<uint32_t>(j));
  }
}

PunctureProof SeedTree::open(const IndexSet& hidden) const {
  PunctureProof p;
  for (const NodePos& pos : cover_positions(m_, depth_, hidden)) p.nodes.push_back({pos, node(pos.level, pos.index)});
  return p;
}

std::vector<std::optional<Seed>> SeedTree::recover(const PunctureProof& proof, size_t m, const IndexSet& hidden) {
  const size_t depth = depth_for(m);
  std::vector<NodePos> got;
  for (const auto& n : proof.nodes) got.push_back(n.pos);
  check_positions(cover_positions(m, depth, hidden), got);

  std::vector<std::optional<Seed>> leaves(m);
  for (const auto& n : proof.nodes) {
    // Expand the subtree below n down to the leaf level.
    std::vector<Seed> cur = {n.seed};
    size_t first = n.pos.index;
    for (size_t l = n.pos.level + 1; l <= depth; ++l) {
      std::vector<Seed> next;
      const size_t span = size_t{1} << (depth - l);
      for (size_t j = 0; j < 2 * cur.size(); ++j) {
        const size_t idx = 2 * first + j;
        if (idx * span >= m) break;
        next.push_back(child_seed(cur[j / 2], static_cast<uint32_t>(l), static_cast<uint32_t>(idx)));
      }
      cur = std::move(next);
      first *= 2;
    }
    for (size_t j = 0; j < cur.size(); ++j) leaves[first + j] = cur[j];
  }
  return leaves;
}

PairTrees::PairTrees(const Seed& root, size_t m) {
  if (m == 0) throw ParamError("pair trees need at least one leaf");
  if (m > kMaxIndex + 1) throw ParamError("pair trees too large");
  parents_.resize((m + 1) / 2);
  leaves_.resize(m);
  for (uint32_t j = 0; j < parents_.size(); ++j) parents_[j] = derive_seed(root, {Ctx::kPairParent, j});
  for (uint32_t i = 0; i < m; ++i) leaves_[i] = child_seed(parents_[i / 2], 1, i);
}

std::vector<NodePos> PairTrees::canonical_positions(size_t m, const IndexSet& hidden) {
  check_index_set(hidden, m);
  std::vector<bool> h(m, false);
  for (uint32_t i : hidden) h[i] = true;
  std::vector<NodePos> out;
  for (uint32_t j = 0; 2 * j < m; ++j) {
    const uint32_t a = 2 * j, b = 2 * j + 1;
    const bool has_b = b < m;
    if (!h[a] && (!has_b || !h[b])) out.push_back({0, j});
    else if (!h[a]) out.push_back({1, a});
    else if (has_b && !h[b]) out.push_back({1, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

PunctureProof PairTrees::open(const IndexSet& hidden) const {
  PunctureProof p;
  for (const NodePos& pos : canonical_positions(leaves_.size(), hidden))
    p.nodes.push_back({pos, pos.level == 0 ? parents_[pos.index] : leaves_[pos.index]});
  return p;
}

std::vector<std::optional<Seed>> PairTrees::recover(const PunctureProof& proof, size_t m, const IndexSet& hidden) {
  std::vector<NodePos> got;
  for (const auto& n : proof.nodes) got.push_back(n.pos);
  check_positions(canonical_positions(m, hidden), got);
  std::vector<std::optional<Seed>> leaves(m);
  for (const auto& n : proof.nodes) {
    if (n.pos.level == 1) {
      leaves[n.pos.index] = n.seed;
      continue;
    }
    const uint32_t a = 2 * n.pos.index;
    leaves[a] = child_seed(n.seed, 1, a);
    if (a + 1 < m) leaves[a + 1] = child_seed(n.seed, 1, a + 1);
  }
  return leaves;
}

size_t MerkleTree::depth_for(size_t m) {
  if (m == 0) throw ParamError("Merkle tree needs at least one leaf");
  return std::bit_width(m - 1);
}

MerkleTree::MerkleTree(std::vector<Commitment> leaves) : m_(leaves.size()), depth_(depth_for(leaves.size())) {
  if (depth_ > kMaxLevel || m_ > kMaxIndex + 1) throw ParamError("Merkle tree too large");
  levels_.resize(depth_ + 1);
  for (uint32_t i = 0; i < m_; ++i) leaves[i] = leaf_hash(i, leaves[i]);
  levels_[depth_] = std::move(leaves);
  for (size_t l = depth_; l-- > 0;) {
    const auto& below = levels_[l + 1];
    auto& cur = levels_[l];
    cur.resize((below.size() + 1) / 2);
    for (size_t j = 0; j < cur.size(); ++j) {
      const Commitment* r = 2 * j + 1 < below.size() ? &below[2 * j + 1] : nullptr;
      cur[j] = node_hash(static_cast<uint32_t>(l), static_cast<uint32_t>(j), below[2 * j], r);
    }
  }
}

MerkleProof MerkleTree::open(const IndexSet& known) const {
  MerkleProof p;
  for (const NodePos& pos : cover_positions(m_, depth_, known)) p.nodes.push_back({pos, levels_[pos.level][pos.index]});
  return p;
}

Commitment merkle_root(const std::vector<Commitment>& leaves) { return MerkleTree(leaves).root(); }

Commitment merkle_root_from(size_t m, const std::vector<std::pair<uint32_t, Commitment>>& known,
                            const MerkleProof& proof) {
  const size_t depth = MerkleTree::depth_for(m);
  IndexSet idx;
  for (const auto& [i, c] : known) idx.push_back(i);
  try {
    check_index_set(idx, m);
  } catch (const ParamError& e) {
    throw ProofError(e.what());
  }
  std::vector<NodePos> got;
  for (const auto& n : proof.nodes) got.push_back(n.pos);
  check_positions(cover_positions(m, depth, idx), got);

  std::vector<std::vector<std::optional<Commitment>>> lv(depth + 1);
  for (size_t l = 0; l <= depth; ++l) {
    const size_t span = size_t{1} << (depth - l);
    lv[l].resize((m + span - 1) / span);
  }
  for (const auto& [i, c] : known) lv[depth][i] = leaf_hash(i, c);
  for (const auto& n : proof.nodes) lv[n.pos.level][n.pos.index] = n.hash;
  for (size_t l = depth; l-- > 0;) {
    const auto& below = lv[l + 1];
    for (size_t j = 0; j < lv[l].size(); ++j) {
      if (lv[l][j]) continue;
      const bool has_r = 2 * j + 1 < below.size();
      if (!below[2 * j] || (has_r && !below[2 * j + 1])) continue;
      lv[l][j] = node_hash(static_cast<uint32_t>(l), static_cast<uint32_t>(j), *below[2 * j],
                           has_r ? &*below[2 * j + 1] : nullptr);
    }
  }
  if (!lv[0][0]) throw ProofError("proof does not determine the root");
  return *lv[0][0];
}

bool merkle_verify(const Commitment& root, size_t m, const std::vector<std::pair<uint32_t, Commitment>>& known,
                   const MerkleProof& proof) {
  try {
    return merkle_root_from(m, known, proof) == root;
  } catch (const ProofError&) {
    return false;
  }
}

void write_proof(ByteWriter& w, const PunctureProof& p) {
  w.u16(static_cast<uint16_t>(p.nodes.size()));
  for (const auto& n : p.nodes) {
    w.u16(pack_pos(n.pos));
    w.raw(n.seed);
  }
}

PunctureProof read_puncture_proof(ByteReader& r) {
  PunctureProof p;
  const uint16_t count = r.u16();
  p.nodes.resize(count);
  for (auto& n : p.nodes) {
    n.pos = unpack_pos(r.u16());
    auto s = r.raw(kSeedBytes);
    std::copy(s.begin(), s.end(), n.seed.begin());
  }
  return p;
}

void write_proof(ByteWriter& w, const MerkleProof& p) {
  w.u16(static_cast<uint16_t>(p.nodes.size()));
  for (const auto& n : p.nodes) {
    w.u16(pack_pos(n.pos));
    w.raw(n.hash);
  }
}

MerkleProof read_merkle_proof(ByteReader& r) {
  MerkleProof p;
  const uint16_t count = r.u16();
  p.nodes.resize(count);
  for (auto& n : p.nodes) {
    n.pos = unpack_pos(r.u16());
    auto s = r.raw(kComBytes);
    std::copy(s.begin(), s.end(), n.hash.begin());
  }
  return p;
}

}  // namespace sdsig

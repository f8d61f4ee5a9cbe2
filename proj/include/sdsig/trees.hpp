#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sdsig/xof.hpp"

namespace sdsig {

// Sorted, duplicate-free list of leaf indices.
using IndexSet = std::vector<uint32_t>;

struct NodePos {
  uint32_t level;
  uint32_t index;
  bool operator==(const NodePos&) const = default;
  auto operator<=>(const NodePos&) const = default;
};

// Maximal subtrees of a depth-d tree over leaves [0, m) that contain at least
// one real leaf and no excluded leaf, sorted by (level, index). Subtrees made
// only of padding are skipped. This is the canonical shape of every proof.
std::vector<NodePos> cover_positions(size_t m, size_t depth, const IndexSet& excluded);

struct SeedNode {
  NodePos pos;
  Seed seed;
  bool operator==(const SeedNode&) const = default;
};

struct PunctureProof {
  std::vector<SeedNode> nodes;
  bool operator==(const PunctureProof&) const = default;
};

// GGM tree. Leaves sit at depth max(1, ceil(log2 m)); child j of a node at
// level l is derive_seed(parent, {Left|Right, l + 1, j}).
class SeedTree {
 public:
  SeedTree(const Seed& root, size_t m);

  size_t num_leaves() const { return m_; }
  size_t depth() const { return depth_; }
  const Seed& node(size_t level, size_t index) const { return levels_[level][index]; }
  const Seed& leaf(size_t i) const { return levels_[depth_][i]; }
  const std::vector<Seed>& leaves() const { return levels_[depth_]; }

  PunctureProof open(const IndexSet& hidden) const;
  // Leaves outside `hidden` (nullopt at hidden positions). The proof must be
  // exactly the canonical one for (m, hidden); anything else is a ProofError.
  static std::vector<std::optional<Seed>> recover(const PunctureProof& proof, size_t m, const IndexSet& hidden);

  static size_t depth_for(size_t m);

 private:
  size_t m_, depth_;
  std::vector<std::vector<Seed>> levels_;
};

// ceil(m/2) independent depth-1 trees. Proof nodes use level 0 for a parent j
// (covering leaves 2j, 2j+1) and level 1 for a single leaf.
class PairTrees {
 public:
  PairTrees(const Seed& root, size_t m);

  size_t num_leaves() const { return leaves_.size(); }
  const Seed& leaf(size_t i) const { return leaves_[i]; }
  const std::vector<Seed>& leaves() const { return leaves_; }

  PunctureProof open(const IndexSet& hidden) const;
  static std::vector<std::optional<Seed>> recover(const PunctureProof& proof, size_t m, const IndexSet& hidden);
  static std::vector<NodePos> canonical_positions(size_t m, const IndexSet& hidden);

 private:
  std::vector<Seed> parents_;
  std::vector<Seed> leaves_;
};

struct MerkleNode {
  NodePos pos;
  Commitment hash;
  bool operator==(const MerkleNode&) const = default;
};

struct MerkleProof {
  std::vector<MerkleNode> nodes;
  bool operator==(const MerkleProof&) const = default;
};

// Binary hash tree of depth ceil(log2 m). Leaf i hashes to
// H(tag(MerkleLeaf, i) || com_i); inner nodes hash their children, the right
// child omitted when its subtree is all padding.
class MerkleTree {
 public:
  explicit MerkleTree(std::vector<Commitment> leaves);

  size_t num_leaves() const { return m_; }
  size_t depth() const { return depth_; }
  const Commitment& root() const { return levels_[0][0]; }
  MerkleProof open(const IndexSet& known) const;

  static size_t depth_for(size_t m);

 private:
  size_t m_, depth_;
  std::vector<std::vector<Commitment>> levels_;
};

Commitment merkle_root(const std::vector<Commitment>& leaves);
// Root implied by the known leaves and a proof; ProofError on a
// non-canonical proof or malformed known set.
Commitment merkle_root_from(size_t m, const std::vector<std::pair<uint32_t, Commitment>>& known,
                            const MerkleProof& proof);
bool merkle_verify(const Commitment& root, size_t m, const std::vector<std::pair<uint32_t, Commitment>>& known,
                   const MerkleProof& proof);

// Wire form: u16be count, then per node u16be (level << 12 | index) and the
// 16-byte seed or 32-byte hash.
void write_proof(ByteWriter& w, const PunctureProof& p);
PunctureProof read_puncture_proof(ByteReader& r);
void write_proof(ByteWriter& w, const MerkleProof& p);
MerkleProof read_merkle_proof(ByteReader& r);

}  // namespace sdsig

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tilekit {

// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;              // sum of parts
  int part(int j) const;         // 1-based; 0 beyond the length
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

  std::string str() const;  // "(4,3,2,2,1)" or "()" for the empty partition

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

// lam/mu interlace when lam_1 >= mu_1 >= lam_2 >= mu_2 >= ...
bool interlaces(const Partition& lam, const Partition& mu);

// Conjugate-side interlacing: lam'/mu' interlace. Equivalent to the
// difference being a horizontal strip with column multiplicities <= 1.
bool co_interlaces(const Partition& lam, const Partition& mu);

// mu <= lam componentwise and lam/mu has at most one cell per column.
bool is_horizontal_strip(const Partition& lam, const Partition& mu);

using PartitionTuple = std::vector<Partition>;

// Conjugates each component and reverses their order.
PartitionTuple tuple_conjugate(const PartitionTuple& t);

bool tuple_interlaces(const PartitionTuple& lam, const PartitionTuple& mu);
bool tuple_co_interlaces(const PartitionTuple& lam, const PartitionTuple& mu);

int tuple_size(const PartitionTuple& t);

// Finite window of a Maya diagram. Cell c (0-based, left to right) covers
// the half-integer position c - zero_position + 1/2, so cells to the left
// of index zero_position sit at negative positions.
struct MayaWindow {
  int width = 0;
  int zero_position = 0;
  std::vector<uint8_t> bits;  // 1 = particle, 0 = hole

  friend bool operator==(const MayaWindow&, const MayaWindow&) = default;
  std::string str() const;  // e.g. "[.*.*|**.*.]" with '|' at the origin
};

// Particle pattern of a partition inside a window. Requires the partition
// to fit: length(p) <= zero_position and p_1 <= width - zero_position.
MayaWindow maya_from_partition(const Partition& p, int width, int zero_position);

// Inverse of maya_from_partition. The window must be balanced (holes left
// of the origin match particles right of it), otherwise no partition has
// this pattern and the call throws.
Partition partition_from_maya(const MayaWindow& w);

bool partition_fits(const Partition& p, int width, int zero_position);

}  // namespace tilekit

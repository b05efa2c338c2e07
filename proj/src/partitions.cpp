#include "tilekit/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tilekit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] <= 0)
      throw std::invalid_argument("Partition: parts must be positive");
    if (j > 0 && parts_[j] > parts_[j - 1])
      throw std::invalid_argument("Partition: parts must weakly decrease");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::part(int j) const {
  if (j < 1) throw std::out_of_range("Partition::part: index is 1-based");
  return j <= length() ? parts_[j - 1] : 0;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t j = 0; j < parts_.size(); ++j) {
    if (j) os << ",";
    os << parts_[j];
  }
  os << ")";
  return os.str();
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  for (int col = 1; col <= p.part(1); ++col) {
    int h = 0;
    while (h < p.length() && p.part(h + 1) >= col) ++h;
    out.push_back(h);
  }
  return Partition(out);
}

bool interlaces(const Partition& lam, const Partition& mu) {
  int n = std::max(lam.length(), mu.length());
  for (int j = 1; j <= n; ++j) {
    if (lam.part(j) < mu.part(j)) return false;
    if (mu.part(j) < lam.part(j + 1)) return false;
  }
  return true;
}

bool co_interlaces(const Partition& lam, const Partition& mu) {
  return interlaces(conjugate(lam), conjugate(mu));
}

bool is_horizontal_strip(const Partition& lam, const Partition& mu) {
  // One cell per column means mu_j >= lam_{j+1}, together with mu <= lam.
  return interlaces(lam, mu);
}

PartitionTuple tuple_conjugate(const PartitionTuple& t) {
  PartitionTuple out;
  out.reserve(t.size());
  for (auto it = t.rbegin(); it != t.rend(); ++it) out.push_back(conjugate(*it));
  return out;
}

static void check_same_colors(const PartitionTuple& a, const PartitionTuple& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("partition tuples differ in color count");
}

bool tuple_interlaces(const PartitionTuple& lam, const PartitionTuple& mu) {
  check_same_colors(lam, mu);
  for (size_t i = 0; i < lam.size(); ++i)
    if (!interlaces(lam[i], mu[i])) return false;
  return true;
}

bool tuple_co_interlaces(const PartitionTuple& lam, const PartitionTuple& mu) {
  check_same_colors(lam, mu);
  for (size_t i = 0; i < lam.size(); ++i)
    if (!co_interlaces(lam[i], mu[i])) return false;
  return true;
}

int tuple_size(const PartitionTuple& t) {
  int s = 0;
  for (auto& p : t) s += p.size();
  return s;
}

std::string MayaWindow::str() const {
  std::string out = "[";
  for (int c = 0; c < width; ++c) {
    if (c == zero_position) out += "|";
    out += bits[c] ? '*' : '.';
  }
  if (zero_position == width) out += "|";
  out += "]";
  return out;
}

bool partition_fits(const Partition& p, int width, int zero_position) {
  return p.length() <= zero_position && p.part(1) <= width - zero_position;
}

MayaWindow maya_from_partition(const Partition& p, int width, int zero_position) {
  if (width < 0 || zero_position < 0 || zero_position > width)
    throw std::invalid_argument("maya_from_partition: bad window");
  if (!partition_fits(p, width, zero_position))
    throw std::invalid_argument("maya_from_partition: partition " + p.str() +
                                " does not fit the window");
  MayaWindow w{width, zero_position, std::vector<uint8_t>(width, 0)};
  // Particles sit at positions p_j - j + 1/2 for j = 1, 2, ...; beyond the
  // length of p every j contributes, filling all cells far enough left.
  for (int j = 1; j <= zero_position; ++j) {
    int pos = p.part(j) - j;  // particle occupies [pos, pos+1]
    int cell = pos + zero_position;
    if (cell >= 0 && cell < width) w.bits[cell] = 1;
  }
  return w;
}

Partition partition_from_maya(const MayaWindow& w) {
  if (static_cast<int>(w.bits.size()) != w.width)
    throw std::invalid_argument("partition_from_maya: bits/width mismatch");
  int holes_left = 0, particles_right = 0;
  for (int c = 0; c < w.width; ++c) {
    if (c < w.zero_position && !w.bits[c]) ++holes_left;
    if (c >= w.zero_position && w.bits[c]) ++particles_right;
  }
  if (holes_left != particles_right)
    throw std::invalid_argument("partition_from_maya: unbalanced window " + w.str());
  // Scan particles right to left; the j-th highest particle at position
  // i = cell - zero_position gives part i + j.
  std::vector<int> parts;
  int j = 0;
  for (int c = w.width - 1; c >= 0; --c) {
    if (!w.bits[c]) continue;
    ++j;
    int part = (c - w.zero_position) + j;
    if (part < 0)
      throw std::invalid_argument("partition_from_maya: window not left-filled");
    if (part > 0) parts.push_back(part);
  }
  // Trailing rows below the window would all need to be zero; the balance
  // check above already guarantees that.
  return Partition(parts);
}

}  // namespace tilekit

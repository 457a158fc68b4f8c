#include "segame/cover.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace segame {

namespace {

void normalize(Cover::Community& c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
}

template <typename Resolve>
void read_lines(std::istream& in, Resolve&& resolve) {
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    std::istringstream fields(line);
    std::string label;
    Cover::Community members;
    bool any = false;
    while (fields >> label) {
      any = true;
      resolve(label, members);
    }
    resolve.end_line(any, std::move(members));
  }
  if (in.bad()) throw std::ios_base::failure("read error while loading communities");
}

}  // namespace

Cover::Cover(std::vector<Community> communities) {
  communities_.reserve(communities.size());
  for (auto& c : communities) add(std::move(c));
}

Cover Cover::from_assignment(std::span<const CommunityId> assignment) {
  std::map<CommunityId, Community> by_id;
  for (NodeId x = 0; x < assignment.size(); ++x) {
    if (assignment[x] != kNoCommunity) by_id[assignment[x]].push_back(x);
  }
  Cover cover;
  cover.communities_.reserve(by_id.size());
  for (auto& [id, members] : by_id) cover.communities_.push_back(std::move(members));
  return cover;
}

std::size_t Cover::add(Community members) {
  if (members.empty()) throw ValidationError("communities must be non-empty");
  normalize(members);
  communities_.push_back(std::move(members));
  return communities_.size() - 1;
}

bool Cover::insert(std::size_t index, NodeId node) {
  Community& c = communities_.at(index);
  auto it = std::lower_bound(c.begin(), c.end(), node);
  if (it != c.end() && *it == node) return false;
  c.insert(it, node);
  return true;
}

NodeId Cover::span_size() const noexcept {
  NodeId n = 0;
  for (const auto& c : communities_) {
    if (!c.empty()) n = std::max<NodeId>(n, c.back() + 1);
  }
  return n;
}

std::vector<std::vector<std::size_t>> Cover::memberships(NodeId node_count) const {
  std::vector<std::vector<std::size_t>> m(node_count);
  for (std::size_t i = 0; i < communities_.size(); ++i) {
    for (NodeId x : communities_[i]) {
      if (x >= node_count) throw ValidationError("community member outside the node range");
      m[x].push_back(i);
    }
  }
  return m;
}

bool Cover::disjoint() const {
  std::vector<char> seen(span_size(), 0);
  for (const auto& c : communities_) {
    for (NodeId x : c) {
      if (seen[x]) return false;
      seen[x] = 1;
    }
  }
  return true;
}

std::size_t Cover::membership_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : communities_) n += c.size();
  return n;
}

bool Cover::same_communities(const Cover& other) const {
  auto a = communities_;
  auto b = other.communities_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

CoverLoad load_cover(std::istream& in, const IdMap& ids) {
  CoverLoad out;
  struct {
    const IdMap& ids;
    CoverLoad& out;
    void operator()(const std::string& label, Cover::Community& members) {
      if (auto id = ids.find(label)) {
        members.push_back(*id);
      } else {
        ++out.dropped_labels;
      }
    }
    void end_line(bool any, Cover::Community members) {
      if (!any) return;
      if (members.empty()) {
        ++out.skipped_lines;
        return;
      }
      out.cover.add(std::move(members));
    }
  } resolve{ids, out};
  read_lines(in, resolve);
  return out;
}

Cover load_cover_extending(std::istream& in, IdMap& ids) {
  Cover cover;
  struct {
    IdMap& ids;
    Cover& cover;
    void operator()(const std::string& label, Cover::Community& members) {
      members.push_back(ids.intern(label));
    }
    void end_line(bool any, Cover::Community members) {
      if (any) cover.add(std::move(members));
    }
  } resolve{ids, cover};
  read_lines(in, resolve);
  return cover;
}

void write_cover(const Cover& cover, const IdMap& ids, std::ostream& out) {
  for (const auto& c : cover) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ' ';
      out << ids.label(c[i]);
    }
    out << '\n';
  }
  if (!out) throw std::ios_base::failure("write error while writing communities");
}

}  // namespace segame

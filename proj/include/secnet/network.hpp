#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "secnet/rational.hpp"

namespace secnet {

struct Link {
  std::string id;
  std::string tail;
  std::string head;
  Rat capacity;  // symbols per block, >= 0
};

// Capacitated directed acyclic graph with one source and one sink.
// Parallel links are first-class and distinguished by id.
struct Network {
  std::vector<std::string> nodes;  // declaration order
  std::vector<Link> links;         // declaration order
  std::string source;
  std::string sink;

  bool has_node(const std::string& id) const;
  int link_index(const std::string& id) const;  // -1 if absent
  const Link& link(const std::string& id) const;

  // Throws InputError unless the graph is acyclic, ids are unique,
  // capacities are nonnegative and all endpoints are declared.
  void validate() const;
};

// The family of link sets the adversary may observe: either an explicit
// list or all k-subsets of an eligible link set.
struct WiretapCollection {
  struct Uniform {
    int k = 0;
    std::vector<std::string> eligible;  // sorted, unique
  };

  std::optional<Uniform> uniform;
  std::vector<std::vector<std::string>> sets;  // explicit variant; each sorted

  bool empty() const;
  void validate(const Network& net) const;
};

struct ParsedNetwork {
  Network network;
  WiretapCollection wiretap;
};

// Line-oriented file format; '#' starts a comment:
//   node <id>
//   link <id> <tail> <head> <capacity>
//   source <id>
//   sink <id>
//   wiretap uniform k=<int> (all | <id>...)
//   wiretap set <id>...          (repeatable)
ParsedNetwork parse_network(const std::string& text);

// Deterministic inverse of parse_network (ids sorted).
std::string serialize_network(const Network& net, const WiretapCollection& coll);

inline constexpr std::size_t kDefaultSetCap = 1'000'000;

// Expands Uniform into all k-subsets and drops dominated (subset) sets.
// Result is Explicit with sets sorted lexicographically by link id.
// Throws EnumerationLimit if the expansion would exceed max_sets.
WiretapCollection normalize_maximal(const WiretapCollection& coll, const Network& net,
                                    std::size_t max_sets = kDefaultSetCap);

// Valid topological order, ties broken by node id.
std::vector<std::string> topological_order(const Network& net);

// Replaces each target link of capacity c by `parts` parallel links of
// capacity c/parts; new ids are "<old>.<i>" for i in 1..parts.
Network subdivide_links(const Network& net, const std::set<std::string>& targets, int parts);

enum class FixtureName { fig1, fig4, fig6 };

// Bundled example networks with their wiretap collections.
ParsedNetwork fixture(FixtureName name);
std::optional<FixtureName> fixture_from_string(const std::string& name);

}  // namespace secnet

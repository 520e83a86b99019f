#include "smale/corpus.hpp"

namespace smale {

namespace {

CorpusEntry entry(std::string name, std::string description, OrderSpec spec, NamedCycles cycles = {}) {
  return {std::move(name), std::move(description), order_document_json(spec, cycles)};
}

}  // namespace

std::vector<CorpusEntry> seed_corpus() {
  std::vector<CorpusEntry> out;
  out.push_back(entry("order", "element A has three ancestors and three children",
                      {{"A", "B", "R1", "R2", "R3", "w1", "w2", "w3"},
                       {{"R1", "A"}, {"R2", "A"}, {"R3", "A"}, {"A", "B"}, {"A", "w1"}, {"A", "w2"}, {"B", "w3"}}}));
  out.push_back(entry("impossibleorder", "two saddles below A without a common descendant",
                      {{"A", "s1", "s2", "w1", "w2"}, {{"A", "s1"}, {"A", "s2"}, {"s1", "w1"}, {"s2", "w2"}}}));

  const OrderSpec diamond{{"alpha", "omega", "s1", "s2"},
                          {{"alpha", "s1"}, {"alpha", "s2"}, {"s1", "omega"}, {"s2", "omega"}}};
  out.push_back(entry("example1", "one source, one sink, two saddles; cycles of length 2 glue to a sphere", diamond,
                      {{"omega", {{"s1", "alpha", "s2"}, {"s2", "alpha", "s1"}}},
                       {"alpha", {{"s1", "omega", "s2"}, {"s2", "omega", "s1"}}}}));
  out.push_back(entry("example", "the same order with cycles of length 4, glued into a torus", diamond,
                      {{"omega", {{"s1", "alpha", "s2"}, {"s2", "alpha", "s1"}, {"s1", "alpha", "s2"}, {"s2", "alpha", "s1"}}},
                       {"alpha", {{"s1", "omega", "s2"}, {"s2", "omega", "s1"}, {"s1", "omega", "s2"}, {"s2", "omega", "s1"}}}}));
  out.push_back(entry("diamond", "two saddles between one source and one sink", diamond));

  out.push_back(entry("fig-left", "A fails connectivity while a saddle chain hangs below it",
                      {{"A", "s1", "s2", "t", "w1", "w2"},
                       {{"A", "s1"}, {"A", "s2"}, {"s1", "t"}, {"t", "w1"}, {"s2", "w2"}}}));
  out.push_back(entry("fig-middle", "A and the attractor B below it both fail connectivity",
                      {{"A", "A2", "B", "s1", "s2", "s3", "w2"},
                       {{"A", "s1"}, {"A", "s2"}, {"s1", "B"}, {"s2", "w2"}, {"A2", "s3"}, {"s3", "B"}}}));
  out.push_back(entry("fig-right", "A fails connectivity and the saddle B below it meets three attractors",
                      {{"A", "B", "s2", "w1", "w2", "w3", "w4"},
                       {{"A", "B"}, {"A", "s2"}, {"B", "w1"}, {"B", "w2"}, {"B", "w3"}, {"s2", "w4"}}}));

  out.push_back(entry("three-chain", "one source, one saddle, one sink", {{"A", "s", "w"}, {{"A", "s"}, {"s", "w"}}}));
  out.push_back(entry("two-repellers", "one saddle between two sources and two sinks",
                      {{"a", "b", "s", "w1", "w2"}, {{"a", "s"}, {"b", "s"}, {"s", "w1"}, {"s", "w2"}}}));
  out.push_back(entry("saddle-chain", "two related saddles; realized with one handle",
                      {{"A", "s1", "s2", "w"}, {{"A", "s1"}, {"s1", "s2"}, {"s2", "w"}}}));
  out.push_back(entry("north-south", "a source directly above a sink", {{"n", "s"}, {{"n", "s"}}}));
  return out;
}

}  // namespace smale

#ifndef DOMDYN_IO_HPP
#define DOMDYN_IO_HPP

#include <iosfwd>
#include <string>

#include "domdyn/generator.hpp"
#include "domdyn/graph.hpp"

namespace domdyn {

// Graph file: header "p <n> <m> <s>", then m lines "a <u> <v>" in
// significant order.
GraphInstance read_graph(std::istream& in);
GraphInstance read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const GraphInstance& inst);
void write_graph_file(const std::string& path, const GraphInstance& inst);

// Sequence file: header "s <seed> <ifrac> <dfrac> <m'>", then lines
// "i <u> <v>", "d <u> <v>" or "q <u> <v>".
UpdateSequence read_sequence(std::istream& in);
UpdateSequence read_sequence_file(const std::string& path);
void write_sequence(std::ostream& out, const UpdateSequence& seq);
void write_sequence_file(const std::string& path, const UpdateSequence& seq);

}  // namespace domdyn

#endif  // DOMDYN_IO_HPP

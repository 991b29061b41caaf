#include "domdyn/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace domdyn {

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  return f;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open file for writing: " + path);
  return f;
}

}  // namespace

GraphInstance read_graph(std::istream& in) {
  GraphInstance inst;
  std::string line;
  long long m = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'c') continue;
    std::istringstream ls(line);
    char tag;
    ls >> tag;
    if (tag == 'p') {
      if (!(ls >> inst.n >> m >> inst.start) || inst.n < 1 || inst.start < 1 ||
          inst.start > inst.n || m < 0)
        throw std::runtime_error("graph file: malformed header");
    } else if (tag == 'a') {
      VertexId u, v;
      if (!(ls >> u >> v)) throw std::runtime_error("graph file: malformed edge line");
      if (u < 1 || u > inst.n || v < 1 || v > inst.n)
        throw std::runtime_error("graph file: edge endpoint out of range");
      inst.edges.emplace_back(u, v);
    } else {
      throw std::runtime_error("graph file: unknown line tag");
    }
  }
  if (m < 0) throw std::runtime_error("graph file: missing header");
  if (static_cast<long long>(inst.edges.size()) != m)
    throw std::runtime_error("graph file: edge count does not match header");
  return inst;
}

GraphInstance read_graph_file(const std::string& path) {
  auto f = open_in(path);
  return read_graph(f);
}

void write_graph(std::ostream& out, const GraphInstance& inst) {
  out << "p " << inst.n << ' ' << inst.edges.size() << ' ' << inst.start << '\n';
  for (auto [u, v] : inst.edges) out << "a " << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const GraphInstance& inst) {
  auto f = open_out(path);
  write_graph(f, inst);
}

UpdateSequence read_sequence(std::istream& in) {
  UpdateSequence seq;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    char tag;
    ls >> tag;
    if (tag == 's') {
      if (!(ls >> seq.seed >> seq.i_frac >> seq.d_frac >> seq.initial_edge_count))
        throw std::runtime_error("sequence file: malformed header");
      have_header = true;
    } else if (tag == 'i' || tag == 'd' || tag == 'q') {
      VertexId u, v;
      if (!(ls >> u >> v)) throw std::runtime_error("sequence file: malformed op line");
      auto kind = tag == 'i'   ? UpdateOp::Kind::Insert
                  : tag == 'd' ? UpdateOp::Kind::Delete
                               : UpdateOp::Kind::Query;
      seq.ops.push_back({kind, u, v});
    } else {
      throw std::runtime_error("sequence file: unknown line tag");
    }
  }
  if (!have_header) throw std::runtime_error("sequence file: missing header");
  return seq;
}

UpdateSequence read_sequence_file(const std::string& path) {
  auto f = open_in(path);
  return read_sequence(f);
}

void write_sequence(std::ostream& out, const UpdateSequence& seq) {
  out << "s " << seq.seed << ' ' << seq.i_frac << ' ' << seq.d_frac << ' '
      << seq.initial_edge_count << '\n';
  for (const auto& op : seq.ops) {
    char tag = op.kind == UpdateOp::Kind::Insert   ? 'i'
               : op.kind == UpdateOp::Kind::Delete ? 'd'
                                                   : 'q';
    out << tag << ' ' << op.u << ' ' << op.v << '\n';
  }
}

void write_sequence_file(const std::string& path, const UpdateSequence& seq) {
  auto f = open_out(path);
  write_sequence(f, seq);
}

}  // namespace domdyn

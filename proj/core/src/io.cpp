#include "jdlat/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "jdlat/ej.hpp"

namespace jdlat {

namespace {

std::vector<long long> tokenize_numbers(const std::string& text, const std::string& what) {
  std::istringstream in(text);
  std::vector<long long> out;
  long long value = 0;
  while (in >> value) {
    out.push_back(value);
  }
  if (!in.eof()) {
    std::string stray;
    in.clear();
    in >> stray;
    throw std::invalid_argument(what + ": unexpected token '" + stray + "'");
  }
  return out;
}

int narrow(long long value, const std::string& what) {
  if (value < -(1ll << 30) || value > (1ll << 30)) {
    throw std::invalid_argument(what + ": value out of range");
  }
  return static_cast<int>(value);
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

PermTuple parse_perm_tuple(const std::string& text) {
  const std::vector<long long> tokens = tokenize_numbers(text, "permutation tuple");
  if (tokens.size() < 2) {
    throw std::invalid_argument("permutation tuple: missing 'n k' header");
  }
  const int n = narrow(tokens[0], "permutation tuple degree");
  const int k = narrow(tokens[1], "permutation tuple chain count");
  if (n < 1) {
    throw std::invalid_argument("permutation tuple: degree must be positive");
  }
  if (k < 2) {
    throw std::invalid_argument("permutation tuple: chain count must be at least 2");
  }
  const std::size_t expect = 2 + static_cast<std::size_t>(k - 1) * static_cast<std::size_t>(n);
  if (tokens.size() != expect) {
    throw std::invalid_argument("permutation tuple: expected " + std::to_string(expect - 2) +
                                " images after the header, got " +
                                std::to_string(tokens.size() - 2));
  }
  std::vector<Permutation> members;
  members.reserve(static_cast<std::size_t>(k - 1));
  std::size_t pos = 2;
  for (int row = 0; row < k - 1; ++row) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      images[static_cast<std::size_t>(j)] = narrow(tokens[pos++], "permutation image");
    }
    members.push_back(Permutation::from_one_line(images));
  }
  return PermTuple(n, std::move(members));
}

std::string write_perm_tuple(const PermTuple& chains) {
  std::ostringstream out;
  out << chains.degree() << ' ' << chains.chain_count() << '\n';
  for (int i = 2; i <= chains.chain_count(); ++i) {
    const std::vector<int> images = chains.member(i).one_line();
    for (std::size_t j = 0; j < images.size(); ++j) {
      out << (j ? " " : "") << images[j];
    }
    out << '\n';
  }
  return out.str();
}

std::string lattice_to_json(const FiniteLattice& L) {
  nlohmann::json doc;
  doc["m"] = L.size();
  doc["labels"] = L.labels();
  nlohmann::json covers = nlohmann::json::array();
  for (const PrimeInterval& c : L.covers()) {
    covers.push_back({c.a, c.b});
  }
  doc["covers"] = std::move(covers);
  return doc.dump(2) + "\n";
}

FiniteLattice lattice_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("lattice document: ") + e.what());
  }
  try {
    const int m = doc.at("m").get<int>();
    std::vector<std::string> labels;
    if (doc.contains("labels") && !doc["labels"].is_null()) {
      labels = doc["labels"].get<std::vector<std::string>>();
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& edge : doc.at("covers")) {
      if (!edge.is_array() || edge.size() != 2) {
        throw std::invalid_argument("lattice document: covers entries must be [a, b] pairs");
      }
      edges.emplace_back(edge[0].get<int>(), edge[1].get<int>());
    }
    return FiniteLattice::from_covers(m, edges, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("lattice document: ") + e.what());
  }
}

std::string lattice_to_dot(const FiniteLattice& L) {
  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (int x = 0; x < L.size(); ++x) {
    out << "  " << x << " [label=" << quote_dot(L.label(x)) << "];\n";
  }
  std::map<int, std::vector<int>> ranks;
  for (int x = 0; x < L.size(); ++x) {
    ranks[L.height(x)].push_back(x);
  }
  for (const auto& [height, members] : ranks) {
    out << "  { rank=same;";
    for (int x : members) {
      out << ' ' << x << ';';
    }
    out << " }\n";
  }
  for (const PrimeInterval& c : L.covers()) {
    out << "  " << c.a << " -> " << c.b << ";\n";
  }
  out << "}\n";
  return out.str();
}

SetFamily parse_set_family(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<SubsetMask> feasible;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n)) {
        continue;  // blank leading line
      }
      std::string stray;
      if (fields >> stray) {
        throw std::invalid_argument("set family: header line must hold n alone");
      }
      continue;
    }
    std::string token;
    SubsetMask set = 0;
    bool any = false;
    while (fields >> token) {
      any = true;
      if (token == "-") {
        continue;
      }
      int element = 0;
      try {
        element = std::stoi(token);
      } catch (const std::exception&) {
        throw std::invalid_argument("set family: unexpected token '" + token + "'");
      }
      if (element < 1 || element > n) {
        throw std::invalid_argument("set family: element " + std::to_string(element) +
                                    " outside 1.." + std::to_string(n));
      }
      set |= SubsetMask{1} << (element - 1);
    }
    if (any) {
      feasible.push_back(set);
    }
  }
  if (n < 0) {
    throw std::invalid_argument("set family: missing header line");
  }
  return make_family(n, std::move(feasible));
}

std::string write_set_family(const SetFamily& fam) {
  std::ostringstream out;
  out << fam.n << '\n';
  for (SubsetMask set : fam.feasible) {
    if (set == 0) {
      out << "-\n";
      continue;
    }
    bool first = true;
    for (int e = 1; e <= fam.n; ++e) {
      if (mask_contains(set, e)) {
        out << (first ? "" : " ") << e;
        first = false;
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string witness_text(const PermTuple& chains) {
  std::string out;
  for (int i = 2; i <= chains.chain_count(); ++i) {
    if (i > 2) {
      out += '|';
    }
    const std::vector<int> images = chains.member(i).one_line();
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (chains.degree() > 9 && j > 0) {
        out += '.';
      }
      out += std::to_string(images[j]);
    }
  }
  return out;
}

std::string census_to_csv(const std::vector<CensusEntry>& entries) {
  std::ostringstream out;
  out << "n,class_id,lattice_size,join_width,labeled_count,witness_sigma\n";
  for (const CensusEntry& entry : entries) {
    out << entry.n << ',' << entry.class_id << ',' << entry.representative.lattice.size() << ','
        << entry.width << ',' << entry.labeled_count << ','
        << (entry.witness ? witness_text(*entry.witness) : "-") << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot write " + path);
  }
  out << text;
}

PermTuple load_perm_tuple(const std::string& path) {
  return parse_perm_tuple(read_text_file(path));
}

FiniteLattice load_lattice_json(const std::string& path) {
  return lattice_from_json(read_text_file(path));
}

SetFamily load_set_family(const std::string& path) {
  return parse_set_family(read_text_file(path));
}

}  // namespace jdlat

// Copyright 2026 The hamsurf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hamsurf/chart.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace hamsurf {

ChartError::ChartError(int line, const std::string& message)
    : std::runtime_error(fmt::format("line {}: {}", line, message)), line_(line) {}

const ChartSurface* ChartData::find_surface(std::string_view name) const {
  for (const auto& s : surfaces) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

namespace {

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

// Splits "head : tail" into word lists.
std::pair<std::vector<std::string>, std::vector<std::string>> split_colon(
    std::string_view line, int line_no) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) throw ChartError(line_no, "missing ':'");
  return {split_words(line.substr(0, colon)), split_words(line.substr(colon + 1))};
}

ChartEdge parse_edge(std::string_view line, int line_no) {
  auto [head, tail] = split_colon(line, line_no);
  if (head.size() != 2) throw ChartError(line_no, "expected 'edge <symbol> :'");
  if (tail.size() != 3 || tail[1] != "->") {
    throw ChartError(line_no, "expected '<from> -> <to>'");
  }
  return ChartEdge{head[1], tail[0], tail[2], line_no};
}

ChartFace parse_face(std::string_view line, int line_no) {
  auto [head, tail] = split_colon(line, line_no);
  if (head.size() != 3) throw ChartError(line_no, "expected 'face <id> <kind> :'");
  ChartFace face;
  face.id = head[1];
  face.line = line_no;
  if (head[2] == "triangle") {
    face.kind = FaceKind::kTriangle;
  } else if (head[2] == "lozenge") {
    face.kind = FaceKind::kLozenge;
  } else {
    throw ChartError(line_no, fmt::format("unknown face kind '{}'", head[2]));
  }
  for (const auto& w : tail) {
    const char sign = w.back();
    if (w.size() < 2 || (sign != '+' && sign != '-')) {
      throw ChartError(line_no, fmt::format("letter '{}' needs a + or - suffix", w));
    }
    face.word.push_back(ChartLetter{w.substr(0, w.size() - 1), sign == '+'});
  }
  return face;
}

ChartSurface parse_surface(std::string_view line, int line_no) {
  auto [head, tail] = split_colon(line, line_no);
  if (head.size() != 2) throw ChartError(line_no, "expected 'surface <name> :'");
  if (tail.empty()) throw ChartError(line_no, "empty surface");
  return ChartSurface{head[1], tail, line_no};
}

}  // namespace

ChartData parse_charts(std::string_view text) {
  ChartData data;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;
    if (words[0] == "edge") {
      data.edges.push_back(parse_edge(line, line_no));
    } else if (words[0] == "face") {
      data.faces.push_back(parse_face(line, line_no));
    } else if (words[0] == "surface") {
      data.surfaces.push_back(parse_surface(line, line_no));
    } else {
      throw ChartError(line_no, fmt::format("unknown record '{}'", words[0]));
    }
  }
  return data;
}

ChartData load_charts(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(fmt::format("cannot open {}", path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_charts(buffer.str());
}

std::string format_charts(const ChartData& data) {
  std::string out;
  for (const auto& e : data.edges) out += fmt::format("edge {} : {} -> {}\n", e.symbol, e.from, e.to);
  for (const auto& f : data.faces) {
    out += fmt::format("face {} {} :", f.id, to_string(f.kind));
    for (const auto& l : f.word) out += fmt::format(" {}{}", l.symbol, l.forward ? '+' : '-');
    out += '\n';
  }
  for (const auto& s : data.surfaces) {
    out += fmt::format("surface {} :", s.name);
    for (const auto& f : s.faces) out += " " + f;
    out += '\n';
  }
  return out;
}

Complex2 build_complex(const ChartData& data) {
  std::set<std::string> vertex_names;
  for (const auto& e : data.edges) {
    vertex_names.insert(e.from);
    vertex_names.insert(e.to);
  }
  Complex2Builder builder;
  std::map<std::string, VertexId> vertices;
  for (const auto& name : vertex_names) vertices[name] = builder.add_vertex(name);

  std::map<std::string, EdgeId> edges;
  for (const auto& e : data.edges) {
    if (edges.count(e.symbol)) throw ChartError(e.line, fmt::format("duplicate edge '{}'", e.symbol));
    edges[e.symbol] = builder.add_edge(e.symbol, vertices.at(e.from), vertices.at(e.to));
  }

  std::set<std::string> face_ids;
  for (const auto& f : data.faces) {
    if (!face_ids.insert(f.id).second) {
      throw ChartError(f.line, fmt::format("duplicate face '{}'", f.id));
    }
    const std::size_t arity = f.kind == FaceKind::kTriangle ? 3 : 4;
    if (f.word.size() != arity) {
      throw ChartError(f.line, fmt::format("face {}: {} needs {} letters, got {}", f.id,
                                           to_string(f.kind), arity, f.word.size()));
    }
    std::vector<EdgeId> boundary;
    for (const auto& letter : f.word) {
      auto it = edges.find(letter.symbol);
      if (it == edges.end()) {
        throw ChartError(f.line, fmt::format("face {}: unknown edge '{}'", f.id, letter.symbol));
      }
      boundary.push_back(letter.forward ? it->second : EdgeId(it->second.value() + 1));
    }
    builder.add_face(f.id, f.kind, std::move(boundary));
  }

  std::set<std::string> surface_names;
  for (const auto& s : data.surfaces) {
    if (!surface_names.insert(s.name).second) {
      throw ChartError(s.line, fmt::format("duplicate surface '{}'", s.name));
    }
    std::set<std::string> seen;
    for (const auto& id : s.faces) {
      if (!face_ids.count(id)) {
        throw ChartError(s.line, fmt::format("surface {}: unknown face '{}'", s.name, id));
      }
      if (!seen.insert(id).second) {
        throw ChartError(s.line, fmt::format("surface {}: face '{}' listed twice", s.name, id));
      }
    }
  }
  return std::move(builder).build();
}

}  // namespace hamsurf

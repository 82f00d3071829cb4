#include "canvaslab/canvas_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace canvaslab {

namespace {

void write_int_array(std::ostringstream& os, const std::vector<int>& xs) {
  os << '[';
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << ']';
}

}  // namespace

std::string serialize_canvas(const Canvas& t, const std::string& name) {
  std::ostringstream os;
  os << "{\"n\":" << t.graph.slots() << ",\"rotation\":[";
  for (int v = 0; v < t.graph.slots(); ++v) {
    if (v) os << ',';
    write_int_array(os, t.graph.rotation[v]);
  }
  os << "],\"outer\":";
  write_int_array(os, t.outer.vertices);
  os << ",\"lists\":[";
  for (int v = 0; v < t.graph.slots(); ++v) {
    if (v) os << ',';
    write_int_array(os, v < static_cast<int>(t.lists.lists.size()) ? t.lists.lists[v]
                                                                   : ColorList{});
  }
  os << ']';
  if (!name.empty()) {
    os << ",\"name\":" << nlohmann::json(name).dump();
  }
  os << "}\n";
  return os.str();
}

NamedCanvas parse_canvas_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  auto fail = [](const std::string& msg) -> void { throw ParseError(msg, 0); };

  if (!doc.is_object()) fail("top level is not an object");
  for (const auto& key : {"n", "rotation", "outer", "lists"})
    if (!doc.contains(key)) fail(std::string("missing key \"") + key + "\"");

  if (!doc["n"].is_number_integer()) fail("\"n\" must be an integer");
  int n = doc["n"].get<int>();
  if (n < 0 || n > 1000000) fail("\"n\" out of range");

  auto read_array = [&](const nlohmann::json& j, const char* what) {
    if (!j.is_array()) fail(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) {
      if (!x.is_number_integer()) fail(std::string(what) + " entries must be integers");
      out.push_back(x.get<int>());
    }
    return out;
  };

  if (!doc["rotation"].is_array() || static_cast<int>(doc["rotation"].size()) != n)
    fail("\"rotation\" must be an array of n arrays");
  PlaneGraph g;
  g.rotation.resize(n);
  g.present.assign(n, 1);
  for (int v = 0; v < n; ++v) {
    g.rotation[v] = read_array(doc["rotation"][v], "rotation row");
    for (int w : g.rotation[v])
      if (w < 0 || w >= n) fail("rotation entry out of range");
  }

  auto outer = read_array(doc["outer"], "\"outer\"");
  for (int w : outer)
    if (w < 0 || w >= n) fail("outer entry out of range");
  if (outer.size() < 3) fail("\"outer\" must list a cycle of length >= 3");

  if (!doc["lists"].is_array() || static_cast<int>(doc["lists"].size()) != n)
    fail("\"lists\" must be an array of n arrays");
  ListAssignment L;
  L.lists.resize(n);
  for (int v = 0; v < n; ++v) L.lists[v] = read_array(doc["lists"][v], "list row");

  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }

  // Designate the outer face when the boundary actually bounds one; the
  // validator reports the problem otherwise.
  try {
    designate_outer_face(g, CycleRef{outer});
  } catch (const PreconditionError&) {
    g.outer_face_id = -1;
  }
  return NamedCanvas{Canvas{std::move(g), CycleRef{outer}, std::move(L)}, name};
}

NamedCanvas load_canvas_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_canvas_text(buf.str());
}

void save_canvas_file(const std::string& path, const Canvas& t, const std::string& name) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path, 0);
  out << serialize_canvas(t, name);
}

std::pair<Canvas, std::vector<Vertex>> compact_ids(const Canvas& t) {
  std::vector<Vertex> old_ids = t.graph.vertices();
  std::vector<int> to_new(t.graph.slots(), -1);
  for (size_t i = 0; i < old_ids.size(); ++i) to_new[old_ids[i]] = static_cast<int>(i);

  PlaneGraph g;
  g.rotation.resize(old_ids.size());
  g.present.assign(old_ids.size(), 1);
  for (size_t i = 0; i < old_ids.size(); ++i)
    for (Vertex w : t.graph.rotation[old_ids[i]]) g.rotation[i].push_back(to_new[w]);

  CycleRef outer;
  for (Vertex v : t.outer.vertices) outer.vertices.push_back(to_new[v]);

  ListAssignment L;
  L.lists.resize(old_ids.size());
  for (size_t i = 0; i < old_ids.size(); ++i)
    if (old_ids[i] < static_cast<int>(t.lists.lists.size()))
      L.lists[i] = t.lists.lists[old_ids[i]];

  designate_outer_face(g, outer);
  return {Canvas{std::move(g), std::move(outer), std::move(L)}, old_ids};
}

}  // namespace canvaslab

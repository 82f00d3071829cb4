// Canonical textual canvas format. One JSON object per file with the keys
// n, rotation, outer, lists and optional name, serialized without
// whitespace and newline-terminated; round-trips are byte-identical.
#ifndef CANVASLAB_CANVAS_IO_HPP
#define CANVASLAB_CANVAS_IO_HPP

#include <string>

#include "canvaslab/canvas.hpp"

namespace canvaslab {

struct ParseError : std::runtime_error {
  size_t byte_offset;
  ParseError(std::string msg, size_t at)
      : std::runtime_error(std::move(msg)), byte_offset(at) {}
};

struct NamedCanvas {
  Canvas canvas;
  std::string name;
};

// Exact canonical serialization.
std::string serialize_canvas(const Canvas& t, const std::string& name = "");

// Parses the canonical format. Structural JSON errors and schema errors
// throw ParseError with a byte offset; the result may still fail
// validate_canvas (validation is the caller's step).
NamedCanvas parse_canvas_text(const std::string& text);

NamedCanvas load_canvas_file(const std::string& path);
void save_canvas_file(const std::string& path, const Canvas& t, const std::string& name = "");

// Order-preserving compaction of vertex ids 0..n'-1 for serializing
// subgraphs whose slots have gaps; returns the canvas plus old-id map.
std::pair<Canvas, std::vector<Vertex>> compact_ids(const Canvas& t);

}  // namespace canvaslab

#endif

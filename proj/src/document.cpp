#include "hlya/document.hpp"

#include <fstream>
#include <sstream>

namespace hlya {

AnyAlgebraDocument load_algebra_document(const json& doc) {
  if (!doc.is_object() || !doc.contains("header") || !doc["header"].is_object() ||
      !doc["header"].contains("field"))
    throw ParseError("algebra document needs header.field");
  AnyField f = load_field(doc["header"]["field"]);
  return std::visit(
      [&](auto field) -> AnyAlgebraDocument {
        using K = std::conditional_t<
            std::is_same_v<decltype(field), Rational::Field>, Rational, Fp>;
        return load_algebra_document_as<K>(doc, field);
      },
      f);
}

AnyAlgebraDocument load_algebra_document_text(const std::string& text) {
  return load_algebra_document(parse_json_text(text));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return j;
}

}  // namespace hlya

#include <charconv>
#include <string>

#include "json.hpp"

#include "irrenum/errors.hpp"
#include "irrenum/pipeline.hpp"

namespace irrenum {

namespace {

std::string format_vector(const std::vector<Coeff>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<Coeff> parse_vector(std::string_view text, std::uint32_t p) {
  std::vector<Coeff> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(pos, comma - pos);
    Coeff c{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), c);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || c >= p) {
      throw ValidationError("invalid coordinate '" + std::string(token) + "'");
    }
    out.push_back(c);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_record_text(const EnumRecord& rec, std::uint32_t p) {
  std::string line = "lyndon=" + to_string(rec.lyndon, p);
  if (rec.polynomial) line += " poly=" + to_string(*rec.polynomial);
  if (rec.roots) {
    line += " roots=";
    for (std::size_t i = 0; i < rec.roots->size(); ++i) {
      if (i) line.push_back(';');
      line += format_vector((*rec.roots)[i]);
    }
    line += " basis=" + to_string(rec.basis);
  }
  return line;
}

std::string format_record_json(const EnumRecord& rec, std::uint32_t p) {
  nlohmann::json j;
  j["lyndon"] = to_string(rec.lyndon, p);
  if (rec.polynomial) {
    j["poly"] = std::vector<Coeff>(rec.polynomial->coeffs().begin(), rec.polynomial->coeffs().end());
  }
  if (rec.roots) {
    j["roots"] = *rec.roots;
    j["basis"] = to_string(rec.basis);
  }
  return j.dump();
}

EnumRecord parse_record_text(std::string_view line, std::uint32_t p) {
  PrimeField field(p);
  Alphabet alphabet(p);
  EnumRecord rec;
  bool have_word = false;
  std::size_t pos = 0;
  while (pos < line.size()) {
    std::size_t space = line.find(' ', pos);
    if (space == std::string_view::npos) space = line.size();
    auto token = line.substr(pos, space - pos);
    pos = space + 1;
    if (token.empty()) continue;
    auto eq = token.find('=');
    if (eq == std::string_view::npos) throw ValidationError("record field without '='");
    auto key = token.substr(0, eq);
    auto value = token.substr(eq + 1);
    if (key == "lyndon") {
      rec.lyndon = parse_word(value, alphabet);
      have_word = true;
    } else if (key == "poly") {
      rec.polynomial = parse_poly(value, field);
    } else if (key == "roots") {
      std::vector<std::vector<Coeff>> roots;
      std::size_t rpos = 0;
      while (rpos <= value.size()) {
        std::size_t semi = value.find(';', rpos);
        if (semi == std::string_view::npos) semi = value.size();
        roots.push_back(parse_vector(value.substr(rpos, semi - rpos), p));
        rpos = semi + 1;
      }
      rec.roots = std::move(roots);
    } else if (key == "basis") {
      rec.basis = parse_root_basis(value);
    } else {
      throw ValidationError("unknown record field '" + std::string(key) + "'");
    }
  }
  if (!have_word) throw ValidationError("record without a lyndon field");
  return rec;
}

EnumRecord parse_record_json(std::string_view line, std::uint32_t p) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed JSON record: ") + e.what());
  }
  PrimeField field(p);
  EnumRecord rec;
  try {
    rec.lyndon = parse_word(j.at("lyndon").get<std::string>(), Alphabet(p));
    if (j.contains("poly")) {
      auto coeffs = j["poly"].get<std::vector<Coeff>>();
      for (Coeff c : coeffs) {
        if (c >= p) throw ValidationError("polynomial coefficient outside F_p");
      }
      rec.polynomial = Poly(std::move(coeffs));
    }
    if (j.contains("roots")) rec.roots = j["roots"].get<std::vector<std::vector<Coeff>>>();
    if (j.contains("basis")) rec.basis = parse_root_basis(j["basis"].get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed JSON record: ") + e.what());
  }
  return rec;
}

}  // namespace irrenum

#include "togglekit/program.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace togglekit {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("program syntax: " + what);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_int(const std::string& text) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    bad("expected an integer, got '" + text + "'");
  }
  if (used != text.size()) bad("trailing characters in integer '" + text + "'");
  return value;
}

RectCoord parse_coord(const std::string& text) {
  if (text.size() < 5 || text.front() != '(' || text.back() != ')')
    bad("expected (i,j), got '" + text + "'");
  std::vector<std::string> nums = split(text.substr(1, text.size() - 2), ',');
  if (nums.size() != 2) bad("expected (i,j), got '" + text + "'");
  return {parse_int(nums[0]), parse_int(nums[1])};
}

std::vector<RectCoord> parse_coord_list(const std::string& text) {
  std::vector<RectCoord> out;
  for (const std::string& part : split(text, ';')) out.push_back(parse_coord(part));
  return out;
}

// Accepts "a=3,b=2" or bare "3,2"; both integers required.
std::pair<int, int> parse_ab(const std::string& args, const std::string& token) {
  std::vector<std::string> parts = split(args, ',');
  if (parts.size() != 2) bad("'" + token + "' needs two arguments");
  auto strip_key = [&](std::string part, const std::string& key) {
    if (part.rfind(key + "=", 0) == 0) part = part.substr(key.size() + 1);
    return part;
  };
  return {parse_int(strip_key(parts[0], "a")), parse_int(strip_key(parts[1], "b"))};
}

}  // namespace

Region parse_region(const std::string& text) {
  if (text == "full") return Region::full();
  size_t eq = text.find('=');
  if (eq == std::string::npos) bad("unknown region '" + text + "'");
  std::string key = text.substr(0, eq), rest = text.substr(eq + 1);
  if (key == "updiag") return Region::up_diagonal(parse_int(rest));
  if (key == "downdiag") return Region::down_diagonal(parse_int(rest));
  if (key == "rank") return Region::rank(parse_int(rest));
  if (key == "file") return Region::file(parse_int(rest));
  if (key == "ideal") return Region::principal_ideal(parse_coord(rest));
  if (key == "ideals") return Region::ideal_of(parse_coord_list(rest));
  if (key == "cells") return Region::explicit_set(parse_coord_list(rest));
  bad("unknown region '" + text + "'");
}

MapProgram MapProgram::inverted() const {
  MapProgram out;
  out.steps.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    MapStep step = *it;
    step.inverse = !step.inverse;
    out.steps.push_back(step);
  }
  return out;
}

MapProgram parse_program(const std::string& text) {
  std::string squeezed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) squeezed += c;
  if (squeezed.empty()) bad("empty program");

  MapProgram prog;
  for (std::string token : split(squeezed, '.')) {
    if (token.empty()) bad("empty step (stray '.')");
    MapStep step;
    if (token.size() >= 3 && token.substr(token.size() - 3) == "^-1") {
      step.inverse = true;
      token = token.substr(0, token.size() - 3);
    }
    std::string args;
    size_t open = token.find('[');
    if (open != std::string::npos) {
      if (token.back() != ']') bad("unbalanced brackets in '" + token + "'");
      args = token.substr(open + 1, token.size() - open - 2);
      token = token.substr(0, open);
    }
    bool has_args = open != std::string::npos;

    if (token == "rsk") {
      step.kind = StepKind::Rsk;
      if (has_args) {
        step.truncated = true;
        std::tie(step.a, step.b) = parse_ab(args, token);
      }
    } else if (token == "phi") {
      step.kind = StepKind::Phi;
      if (has_args) bad("'phi' takes no arguments");
    } else if (token == "proP" || token == "proQ") {
      step.side = token == "proP" ? Side::P : Side::Q;
      if (has_args) {
        step.kind = StepKind::ProTrunc;
        step.truncated = true;
        std::tie(step.a, step.b) = parse_ab(args, token);
      } else {
        step.kind = StepKind::ProFull;
      }
    } else if (token == "evacP" || token == "evacQ") {
      step.side = token == "evacP" ? Side::P : Side::Q;
      if (has_args) {
        step.kind = StepKind::EvacTrunc;
        step.truncated = true;
        std::tie(step.a, step.b) = parse_ab(args, token);
      } else {
        step.kind = StepKind::EvacFull;
      }
    } else if (token == "swpro") {
      step.kind = StepKind::Swpro;
      if (has_args) bad("'swpro' takes no arguments");
    } else if (token == "E") {
      step.kind = StepKind::BigE;
      if (has_args) bad("'E' takes no arguments");
    } else if (token == "omega") {
      step.kind = StepKind::Omega;
      if (has_args) bad("'omega' takes no arguments");
    } else if (token == "rho") {
      step.kind = StepKind::Rho;
      step.region = has_args ? parse_region(args) : Region::full();
    } else {
      bad("unknown map '" + token + "'");
    }
    prog.steps.push_back(std::move(step));
  }
  return prog;
}

std::string format_program(const MapProgram& prog) {
  std::string out;
  for (size_t t = 0; t < prog.steps.size(); ++t) {
    const MapStep& step = prog.steps[t];
    if (t) out += '.';
    std::string name;
    switch (step.kind) {
      case StepKind::Rsk: name = "rsk"; break;
      case StepKind::Phi: name = "phi"; break;
      case StepKind::ProTrunc:
      case StepKind::ProFull: name = step.side == Side::P ? "proP" : "proQ"; break;
      case StepKind::EvacTrunc:
      case StepKind::EvacFull: name = step.side == Side::P ? "evacP" : "evacQ"; break;
      case StepKind::Swpro: name = "swpro"; break;
      case StepKind::BigE: name = "E"; break;
      case StepKind::Omega: name = "omega"; break;
      case StepKind::Rho: name = "rho"; break;
    }
    out += name;
    if (step.truncated)
      out += "[a=" + std::to_string(step.a) + ",b=" + std::to_string(step.b) + "]";
    else if (step.kind == StepKind::Rho)
      out += "[" + region_str(step.region) + "]";
    if (step.inverse) out += "^-1";
  }
  return out;
}

Labeling apply_step(const Labeling& x, const MapStep& step) {
  switch (step.kind) {
    case StepKind::Rsk:
      return step.truncated ? rsk_ab(x, step.a, step.b, step.inverse) : rsk(x, step.inverse);
    case StepKind::Phi: return step.inverse ? transfer_inverse(x) : transfer(x);
    case StepKind::ProTrunc: return pro_trunc(x, step.side, step.a, step.b, step.inverse);
    case StepKind::ProFull: return pro_full(x, step.side, step.inverse);
    case StepKind::EvacTrunc: return evac_trunc(x, step.side, step.a, step.b, step.inverse);
    case StepKind::EvacFull: return evac_full(x, step.side, step.inverse);
    case StepKind::Swpro: return swpro(x, step.inverse);
    case StepKind::BigE: return big_e(x, step.inverse);
    case StepKind::Omega: return omega(x, step.inverse);
    case StepKind::Rho: return rowmotion(x, step.region, step.inverse);
  }
  throw std::logic_error("unhandled step kind");
}

Labeling apply_program(const Labeling& x, const MapProgram& prog) {
  Labeling out = x;
  for (auto it = prog.steps.rbegin(); it != prog.steps.rend(); ++it) out = apply_step(out, *it);
  return out;
}

}  // namespace togglekit

#include "prmkit/parse.hpp"

#include <algorithm>
#include <cctype>
#include <string_view>

#include "json.hpp"

#include "prmkit/error.hpp"

namespace prmkit::parse {

namespace {

constexpr std::string_view kThinkOpen = "<think>";
constexpr std::string_view kThinkClose = "</think>";
constexpr std::string_view kBoxedPrefix = "\\boxed{";

struct ThinkSpan {
  std::size_t open_begin;     // offset of '<' of the open tag
  std::size_t content_begin;  // first byte after the open tag
  std::size_t content_end;    // offset of '<' of the close tag
  std::size_t close_end;      // first byte after the close tag
};

std::optional<ThinkSpan> find_think_span(std::string_view text) {
  const std::size_t open = text.find(kThinkOpen);
  if (open == std::string_view::npos) return std::nullopt;
  const std::size_t content_begin = open + kThinkOpen.size();
  const std::size_t close = text.find(kThinkClose, content_begin);
  if (close == std::string_view::npos) return std::nullopt;
  return ThinkSpan{open, content_begin, close, close + kThinkClose.size()};
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

void scan_boxed(std::string_view text, std::size_t from, std::size_t to,
                std::vector<BoxedJudgment>& out) {
  std::size_t pos = from;
  while (pos < to) {
    const std::size_t hit = text.find(kBoxedPrefix, pos);
    if (hit == std::string_view::npos || hit >= to) break;
    const std::size_t brace_open = hit + kBoxedPrefix.size() - 1;
    const std::size_t brace_close = text.find('}', brace_open + 1);
    if (brace_close != std::string_view::npos && brace_close < to) {
      const std::string_view content =
          text.substr(brace_open + 1, brace_close - brace_open - 1);
      if (content == "0" || content == "1") {
        out.push_back(BoxedJudgment{hit, content == "1" ? 1 : 0});
        pos = brace_close + 1;
        continue;
      }
    }
    // Invalid or unterminated content; a nested marker may start inside it.
    pos = hit + kBoxedPrefix.size();
  }
}

// Offset of the '}' closing the object that opens at `open`, tracking JSON
// string literals and escapes, or npos if the text ends first.
std::size_t match_object_end(std::string_view text, std::size_t open) {
  int depth = 0;
  bool in_string = false;
  bool escaped = false;
  for (std::size_t i = open; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) return i;
    }
  }
  return std::string_view::npos;
}

}  // namespace

std::optional<std::string> extract_think(const RawOutput& raw) {
  const auto span = find_think_span(raw.text);
  if (!span) return std::nullopt;
  return raw.text.substr(span->content_begin,
                         span->content_end - span->content_begin);
}

std::vector<BoxedJudgment> extract_step_judgments(const RawOutput& raw) {
  const std::string_view text = raw.text;
  std::vector<BoxedJudgment> out;
  if (const auto span = find_think_span(text)) {
    scan_boxed(text, 0, span->open_begin, out);
    scan_boxed(text, span->close_end, text.size(), out);
  } else {
    scan_boxed(text, 0, text.size(), out);
  }
  return out;
}

std::optional<std::vector<int>> extract_score_json(const RawOutput& raw) {
  const std::string_view text = raw.text;
  std::optional<std::vector<long long>> last;
  std::size_t pos = text.find('{');
  while (pos != std::string_view::npos) {
    const std::size_t end = match_object_end(text, pos);
    if (end != std::string_view::npos) {
      const auto candidate = nlohmann::json::parse(
          text.begin() + static_cast<std::ptrdiff_t>(pos),
          text.begin() + static_cast<std::ptrdiff_t>(end) + 1,
          /*cb=*/nullptr, /*allow_exceptions=*/false);
      if (candidate.is_object() && candidate.contains("Score") &&
          candidate["Score"].is_array()) {
        const auto& arr = candidate["Score"];
        const bool all_integers =
            std::all_of(arr.begin(), arr.end(), [](const nlohmann::json& v) {
              return v.is_number_integer();
            });
        if (all_integers) {
          std::vector<long long> values;
          values.reserve(arr.size());
          for (const auto& v : arr) values.push_back(v.get<long long>());
          last = std::move(values);
        }
      }
    }
    pos = text.find('{', pos + 1);
  }
  if (!last) return std::nullopt;
  std::vector<int> result;
  result.reserve(last->size());
  for (const long long v : *last) {
    if (v != 0 && v != 1) return std::nullopt;
    result.push_back(static_cast<int>(v));
  }
  return result;
}

ParsedEvaluation parse_evaluation(const RawOutput& raw) {
  ParsedEvaluation parsed;
  parsed.think = extract_think(raw);
  parsed.step_judgments = extract_step_judgments(raw);
  parsed.score_vector = extract_score_json(raw);
  return parsed;
}

FormatCheck check_format(const ParsedEvaluation& parsed, std::size_t n_steps) {
  if (n_steps == 0) {
    raise(Errc::InvalidStepCount, "check_format: n_steps must be >= 1");
  }
  FormatCheck check;
  check.has_think = parsed.think.has_value() && !is_blank(*parsed.think);
  check.has_step_judge = !parsed.step_judgments.empty();
  check.has_final_judge = parsed.score_vector.has_value();
  check.length_ok =
      parsed.score_vector && parsed.score_vector->size() == n_steps;
  if (parsed.step_judgments.size() == n_steps && parsed.score_vector) {
    const auto& score = *parsed.score_vector;
    check.consistent =
        score.size() == n_steps &&
        std::equal(score.begin(), score.end(), parsed.step_judgments.begin(),
                   [](int s, const BoxedJudgment& j) { return s == j.value; });
  } else {
    check.consistent = true;
  }
  return check;
}

}  // namespace prmkit::parse

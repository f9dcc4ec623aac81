#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qstack {

// Input error with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line), column_(column), msg_(msg) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return msg_; }

 private:
  int line_, column_;
  std::string msg_;
};

struct Token {
  std::string text;
  int column;  // 1-based
};

// Whitespace split; '#' starts a comment.
std::vector<Token> tokenize_line(const std::string& line);
std::vector<std::string> split_lines(const std::string& text);
std::string read_file(const std::string& path);

}  // namespace qstack

#ifndef LIQ_DETAIL_XML_HPP
#define LIQ_DETAIL_XML_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liq/errors.hpp"

namespace liq {
namespace detail {
namespace xml {

/// Non-validating DOM for small config-sized documents. Handles elements,
/// attributes, character data, CDATA, comments, processing instructions and
/// the five predefined entities plus numeric references. No DTD expansion.
struct Element {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attrs;
  std::vector<Element> children;
  std::string text;

  const std::string* attr(std::string_view key) const {
    for (const auto& kv : attrs)
      if (kv.first == key) return &kv.second;
    return nullptr;
  }
  const Element* child(std::string_view local) const {
    for (const auto& c : children)
      if (local_name(c.name) == local) return &c;
    return nullptr;
  }

  static std::string_view local_name(std::string_view qname) {
    auto pos = qname.rfind(':');
    return pos == std::string_view::npos ? qname : qname.substr(pos + 1);
  }
};

class Parser {
public:
  explicit Parser(std::string_view src) : s_(src) {}

  Element run() {
    skip_misc();
    if (eof() || s_[p_] != '<') throw MalformedXml("no root element");
    Element root = parse_element();
    skip_misc();
    if (!eof()) throw MalformedXml("content after the root element");
    return root;
  }

private:
  bool eof() const { return p_ >= s_.size(); }
  char peek() const { return s_[p_]; }
  bool starts(std::string_view t) const { return s_.substr(p_, t.size()) == t; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }

  void skip_until(std::string_view terminator, const char* what) {
    auto pos = s_.find(terminator, p_);
    if (pos == std::string_view::npos)
      throw MalformedXml(std::string("unterminated ") + what);
    p_ = pos + terminator.size();
  }

  // whitespace, comments, PIs and DOCTYPE between elements
  void skip_misc() {
    for (;;) {
      skip_ws();
      if (starts("<!--")) {
        skip_until("-->", "comment");
      } else if (starts("<?")) {
        skip_until("?>", "processing instruction");
      } else if (starts("<!DOCTYPE")) {
        skip_until(">", "doctype");
      } else {
        return;
      }
    }
  }

  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || c == '.' || c == ':';
  }

  std::string parse_name() {
    std::size_t start = p_;
    while (!eof() && name_char(s_[p_])) ++p_;
    if (p_ == start) throw MalformedXml("expected a name");
    return std::string(s_.substr(start, p_ - start));
  }

  std::string decode(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size();) {
      if (raw[i] != '&') {
        out.push_back(raw[i++]);
        continue;
      }
      auto end = raw.find(';', i);
      if (end == std::string_view::npos)
        throw MalformedXml("unterminated entity reference");
      std::string_view ent = raw.substr(i + 1, end - i - 1);
      if (ent == "amp") out.push_back('&');
      else if (ent == "lt") out.push_back('<');
      else if (ent == "gt") out.push_back('>');
      else if (ent == "quot") out.push_back('"');
      else if (ent == "apos") out.push_back('\'');
      else if (!ent.empty() && ent[0] == '#') {
        int base = 10;
        std::string_view digits = ent.substr(1);
        if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
          base = 16;
          digits = digits.substr(1);
        }
        unsigned long code = 0;
        if (digits.empty()) throw MalformedXml("bad character reference");
        for (char c : digits) {
          int d;
          if (c >= '0' && c <= '9') d = c - '0';
          else if (base == 16 && c >= 'a' && c <= 'f') d = c - 'a' + 10;
          else if (base == 16 && c >= 'A' && c <= 'F') d = c - 'A' + 10;
          else throw MalformedXml("bad character reference");
          code = code * base + static_cast<unsigned long>(d);
        }
        if (code == 0 || code > 0x10FFFF)
          throw MalformedXml("character reference out of range");
        // UTF-8 encode
        if (code < 0x80) {
          out.push_back(static_cast<char>(code));
        } else if (code < 0x800) {
          out.push_back(static_cast<char>(0xC0 | (code >> 6)));
          out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
        } else if (code < 0x10000) {
          out.push_back(static_cast<char>(0xE0 | (code >> 12)));
          out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
          out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
        } else {
          out.push_back(static_cast<char>(0xF0 | (code >> 18)));
          out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
          out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
          out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
        }
      } else {
        throw MalformedXml("unknown entity reference");
      }
      i = end + 1;
    }
    return out;
  }

  void parse_attributes(Element& el) {
    for (;;) {
      skip_ws();
      if (eof()) throw MalformedXml("unterminated start tag");
      if (peek() == '>' || peek() == '/') return;
      std::string key = parse_name();
      skip_ws();
      if (eof() || peek() != '=') throw MalformedXml("attribute without value");
      ++p_;
      skip_ws();
      if (eof() || (peek() != '"' && peek() != '\''))
        throw MalformedXml("unquoted attribute value");
      char quote = s_[p_++];
      auto end = s_.find(quote, p_);
      if (end == std::string_view::npos)
        throw MalformedXml("unterminated attribute value");
      el.attrs.emplace_back(std::move(key), decode(s_.substr(p_, end - p_)));
      p_ = end + 1;
    }
  }

  Element parse_element() {
    ++p_;  // consume '<'
    Element el;
    el.name = parse_name();
    parse_attributes(el);
    if (starts("/>")) {
      p_ += 2;
      return el;
    }
    if (eof() || peek() != '>') throw MalformedXml("malformed start tag");
    ++p_;

    for (;;) {
      std::size_t lt = s_.find('<', p_);
      if (lt == std::string_view::npos)
        throw MalformedXml("unterminated element <" + el.name + ">");
      if (lt > p_) el.text += decode(s_.substr(p_, lt - p_));
      p_ = lt;
      if (starts("<!--")) {
        skip_until("-->", "comment");
      } else if (starts("<![CDATA[")) {
        p_ += 9;
        auto end = s_.find("]]>", p_);
        if (end == std::string_view::npos)
          throw MalformedXml("unterminated CDATA section");
        el.text.append(s_.substr(p_, end - p_));
        p_ = end + 3;
      } else if (starts("<?")) {
        skip_until("?>", "processing instruction");
      } else if (starts("</")) {
        p_ += 2;
        std::string closing = parse_name();
        skip_ws();
        if (eof() || peek() != '>') throw MalformedXml("malformed end tag");
        ++p_;
        if (closing != el.name)
          throw MalformedXml("mismatched end tag </" + closing + "> for <" +
                             el.name + ">");
        return el;
      } else {
        el.children.push_back(parse_element());
      }
    }
  }

  std::string_view s_;
  std::size_t p_ = 0;
};

inline Element parse(std::string_view src) { return Parser(src).run(); }

}  // namespace xml
}  // namespace detail
}  // namespace liq

#endif  // LIQ_DETAIL_XML_HPP

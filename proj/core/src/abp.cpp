#include "ctc/abp.hpp"

#include <vector>

#include "ctc/errors.hpp"
#include "ctc/parser.hpp"

namespace ctc {

namespace {

std::string flip(char b) { return b == '0' ? "1" : "0"; }

std::string chan(const std::string& base, const std::string& s) { return base + "_" + (s.empty() ? "e" : s); }

void sequences(int max_len, std::vector<std::string>& out) {
  out.push_back("");
  for (std::size_t i = 0; i < out.size(); ++i)
    if (static_cast<int>(out[i].size()) < max_len)
      for (const char* b : {"0", "1"}) out.push_back(out[i] + b);
}

std::string join_sum(const std::vector<std::string>& summands) {
  if (summands.empty()) return "nil";
  std::string out;
  for (const auto& s : summands) {
    if (!out.empty()) out += "\n    + ";
    out += s;
  }
  return out;
}

// Loss of one message, or duplication when there is room.
void noise(const std::string& base, const std::string& s, int capacity, std::vector<std::string>& out) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.push_back("tau." + chan(base, s.substr(0, i) + s.substr(i + 1)));
    if (static_cast<int>(s.size()) < capacity) out.push_back("tau." + chan(base, s.substr(0, i + 1) + s.substr(i)));
  }
}

}  // namespace

std::string abp_source(int capacity) {
  if (capacity < 1) throw InvalidArgument("channel capacity must be at least 1");
  std::string src;
  for (const char* bit : {"0", "1"}) {
    const std::string b = bit, nb = flip(bit[0]);
    src += "Send_" + b + " = 'send_" + b + ".'time.Sending_" + b + ";\n";
    src += "Sending_" + b + " = timeout.Send_" + b + " + ack_" + b + ".timeout.AcceptS_" + nb + " + ack_" + nb +
           ".DeliverS_" + b + ";\n";
    src += "AcceptS_" + b + " = acceptS.Send_" + b + ";\n";
    src += "DeliverS_" + b + " = 'deliverS.Sending_" + b + ";\n";
    src += "Reply_" + b + " = 'reply_" + b + ".'time.Replying_" + b + ";\n";
    src += "Replying_" + b + " = timeout.Reply_" + b + " + trans_" + nb + ".timeout.DeliverR_" + nb + " + trans_" +
           b + ".AcceptR_" + b + ";\n";
    src += "DeliverR_" + b + " = 'deliverR.Reply_" + b + ";\n";
    src += "AcceptR_" + b + " = acceptR.Replying_" + b + ";\n";
  }
  src += "Timer = time.'timeout.Timer;\n";

  std::vector<std::string> seqs;
  sequences(capacity, seqs);
  const int cap = capacity;
  // Trans delivers from the back and accepts at the front; Ack delivers
  // from the front and accepts at the back.
  for (const auto& s : seqs) {
    std::vector<std::string> sum;
    if (!s.empty()) sum.push_back("'trans_" + s.substr(s.size() - 1) + "." + chan("Trans", s.substr(0, s.size() - 1)));
    if (static_cast<int>(s.size()) < cap)
      for (const char* b : {"0", "1"}) sum.push_back("send_" + std::string(b) + "." + chan("Trans", b + s));
    noise("Trans", s, cap, sum);
    src += chan("Trans", s) + " = " + join_sum(sum) + ";\n";
  }
  for (const auto& s : seqs) {
    std::vector<std::string> sum;
    if (!s.empty()) sum.push_back("'ack_" + s.substr(0, 1) + "." + chan("Ack", s.substr(1)));
    if (static_cast<int>(s.size()) < cap)
      for (const char* b : {"0", "1"}) sum.push_back("reply_" + std::string(b) + "." + chan("Ack", s + b));
    noise("Ack", s, cap, sum);
    src += chan("Ack", s) + " = " + join_sum(sum) + ";\n";
  }

  src += "AB = (AcceptS_1 || Trans_e || Ack_e || Reply_0 || Timer)\n"
         "    \\ {send_0, send_1, trans_0, trans_1, ack_0, ack_1, reply_0, reply_1, time, timeout};\n";
  src += "Buff = (acceptS || acceptR).BuffP;\n";
  src += "BuffP = ('deliverS || 'deliverR).Buff;\n";
  return src;
}

AbpModel make_abp(int capacity) {
  AbpModel m;
  m.capacity = capacity;
  m.source = abp_source(capacity);
  m.env = parse_program(m.source);
  m.system = Process::constant("AB");
  m.spec = Process::constant("Buff");
  return m;
}

}  // namespace ctc

#include "chebcrypt/wire.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <sys/types.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

namespace chebcrypt::wire {

namespace {

constexpr const char* kKindNames[] = {"HELLO", "PUB", "CHAL", "RESP", "CONFIRM", "FAIL"};

long parse_long_field(const std::string& s) {
    if (s.empty() || s.size() > 18) {
        throw MalformedMessage("bad integer field: \"" + s + "\"");
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            throw MalformedMessage("bad integer field: \"" + s + "\"");
        }
    }
    return std::stol(s);
}

void set_timeouts(int fd, int timeout_sec) {
    timeval tv{};
    tv.tv_sec = timeout_sec;
    setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof(tv));
    setsockopt(fd, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof(tv));
}

[[noreturn]] void throw_peer_fail(const WireMessage& msg) {
    const std::string reason = msg.fields.empty() ? "unspecified" : msg.fields[0];
    if (reason == "config_mismatch") {
        throw ConfigMismatch("peer reported config_mismatch");
    }
    if (reason == "auth_failed") {
        throw AuthFailed("peer reported auth_failed");
    }
    throw KeyMismatch("peer reported " + reason);
}

Real parse_value(const std::string& field, long digits) {
    try {
        return real_from_decimal(field, digits);
    } catch (const ParseError&) {
        throw MalformedMessage("unparsable value field");
    }
}

}  // namespace

const char* to_string(Kind kind) { return kKindNames[static_cast<int>(kind)]; }

std::string encode(const WireMessage& msg) {
    std::string out = to_string(msg.kind);
    for (const std::string& f : msg.fields) {
        out += '\t';
        for (char c : f) {
            if (c < 0x20 || c == 0x7f) {
                throw MalformedMessage("field contains control characters");
            }
        }
        out += f;
    }
    out += '\n';
    if (out.size() > kMaxLineBytes) {
        throw MalformedMessage("encoded message exceeds 64 KiB");
    }
    return out;
}

WireMessage decode(std::string_view line) {
    if (line.empty() || line.size() > kMaxLineBytes) {
        throw MalformedMessage("empty or oversized line");
    }
    if (line.back() != '\n') {
        throw MalformedMessage("truncated line (no terminator)");
    }
    line.remove_suffix(1);
    WireMessage msg;
    size_t start = 0;
    bool have_kind = false;
    while (true) {
        const size_t tab = line.find('\t', start);
        const std::string_view tok =
            line.substr(start, tab == std::string_view::npos ? std::string_view::npos
                                                             : tab - start);
        if (!have_kind) {
            bool matched = false;
            for (int k = 0; k < 6; ++k) {
                if (tok == kKindNames[k]) {
                    msg.kind = static_cast<Kind>(k);
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                throw MalformedMessage("unknown message kind: \"" + std::string(tok) + "\"");
            }
            have_kind = true;
        } else {
            for (char c : tok) {
                if (c < 0x20 || c == 0x7f) {
                    throw MalformedMessage("field contains control characters");
                }
            }
            msg.fields.emplace_back(tok);
        }
        if (tab == std::string_view::npos) {
            break;
        }
        start = tab + 1;
    }
    return msg;
}

WireMessage SessionConfig::hello() const {
    return WireMessage{Kind::hello,
                       {kProtocolVersion, std::to_string(precision_digits),
                        std::to_string(agree_digits), std::to_string(max_index_digits),
                        std::to_string(min_security_bits)}};
}

SessionConfig SessionConfig::from_hello(const WireMessage& msg) {
    if (msg.kind != Kind::hello || msg.fields.size() != 5) {
        throw MalformedMessage("HELLO must carry version, D, N, max_index, min_security");
    }
    if (msg.fields[0] != kProtocolVersion) {
        throw ConfigMismatch("unsupported protocol version " + msg.fields[0]);
    }
    SessionConfig cfg;
    cfg.precision_digits = parse_long_field(msg.fields[1]);
    cfg.agree_digits = parse_long_field(msg.fields[2]);
    cfg.max_index_digits = parse_long_field(msg.fields[3]);
    cfg.min_security_bits = parse_long_field(msg.fields[4]);
    return cfg;
}

long security_bits_for_index_digits(long index_digits) {
    // log2(10) ~ 3.32 bits per digit, halved for the square-root search.
    return static_cast<long>(index_digits * 3.3219280948873623 / 2.0);
}

LineChannel::LineChannel(int fd, int timeout_sec) : fd_(fd) {
    set_timeouts(fd_, timeout_sec);
    int one = 1;
    setsockopt(fd_, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
}

LineChannel::LineChannel(LineChannel&& other) noexcept
    : fd_(other.fd_), buffer_(std::move(other.buffer_)) {
    other.fd_ = -1;
}

LineChannel& LineChannel::operator=(LineChannel&& other) noexcept {
    if (this != &other) {
        if (fd_ >= 0) {
            ::close(fd_);
        }
        fd_ = other.fd_;
        buffer_ = std::move(other.buffer_);
        other.fd_ = -1;
    }
    return *this;
}

LineChannel::~LineChannel() {
    if (fd_ >= 0) {
        ::close(fd_);
    }
}

void LineChannel::send(const WireMessage& msg) {
    const std::string line = encode(msg);
    size_t sent = 0;
    while (sent < line.size()) {
        const ssize_t n = ::send(fd_, line.data() + sent, line.size() - sent, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EAGAIN || errno == EWOULDBLOCK) {
                throw Timeout("send timed out");
            }
            throw SocketError(std::string("send failed: ") + std::strerror(errno));
        }
        sent += static_cast<size_t>(n);
    }
}

WireMessage LineChannel::recv() {
    while (true) {
        const size_t nl = buffer_.find('\n');
        if (nl != std::string::npos) {
            std::string line = buffer_.substr(0, nl + 1);
            buffer_.erase(0, nl + 1);
            return decode(line);
        }
        if (buffer_.size() > kMaxLineBytes) {
            throw MalformedMessage("line exceeds 64 KiB");
        }
        char chunk[4096];
        const ssize_t n = ::recv(fd_, chunk, sizeof(chunk), 0);
        if (n < 0) {
            if (errno == EAGAIN || errno == EWOULDBLOCK) {
                throw Timeout("recv timed out");
            }
            throw SocketError(std::string("recv failed: ") + std::strerror(errno));
        }
        if (n == 0) {
            throw SocketError("peer closed the connection");
        }
        buffer_.append(chunk, static_cast<size_t>(n));
    }
}

Listener::Listener(uint16_t port) {
    fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd_ < 0) {
        throw SocketError(std::string("socket failed: ") + std::strerror(errno));
    }
    int one = 1;
    setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_ANY);
    addr.sin_port = htons(port);
    if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) < 0 ||
        ::listen(fd_, 8) < 0) {
        const std::string err = std::strerror(errno);
        ::close(fd_);
        throw SocketError("bind/listen failed: " + err);
    }
    socklen_t len = sizeof(addr);
    getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    port_ = ntohs(addr.sin_port);
}

Listener::~Listener() {
    if (fd_ >= 0) {
        ::close(fd_);
    }
}

LineChannel Listener::accept_one(int timeout_sec) {
    pollfd pfd{fd_, POLLIN, 0};
    const int rc = ::poll(&pfd, 1, timeout_sec * 1000);
    if (rc == 0) {
        throw Timeout("no connection within the accept timeout");
    }
    if (rc < 0) {
        throw SocketError(std::string("poll failed: ") + std::strerror(errno));
    }
    const int fd = ::accept(fd_, nullptr, nullptr);
    if (fd < 0) {
        throw SocketError(std::string("accept failed: ") + std::strerror(errno));
    }
    return LineChannel(fd);
}

LineChannel connect_to(const std::string& host, uint16_t port, int timeout_sec) {
    addrinfo hints{};
    hints.ai_family = AF_INET;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* res = nullptr;
    if (getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints, &res) != 0 || !res) {
        throw SocketError("cannot resolve host \"" + host + "\"");
    }
    int fd = ::socket(res->ai_family, res->ai_socktype, res->ai_protocol);
    if (fd < 0) {
        freeaddrinfo(res);
        throw SocketError(std::string("socket failed: ") + std::strerror(errno));
    }
    const int rc = ::connect(fd, res->ai_addr, res->ai_addrlen);
    freeaddrinfo(res);
    if (rc < 0) {
        const std::string err = std::strerror(errno);
        ::close(fd);
        throw SocketError("connect failed: " + err);
    }
    return LineChannel(fd, timeout_sec);
}

SessionKey run_responder(LineChannel& channel, const KeyPair& keys, const SessionConfig& config) {
    if (keys.pub.precision_digits != config.precision_digits ||
        keys.pub.agree_digits != config.agree_digits) {
        throw BadParams("responder key parameters do not match the session config");
    }
    const long d = config.precision_digits;
    const long n = config.agree_digits;

    WireMessage msg = channel.recv();
    if (msg.kind == Kind::fail) {
        throw_peer_fail(msg);
    }
    const SessionConfig peer = SessionConfig::from_hello(msg);
    const long achieved = security_bits_for_index_digits(keys.secret.digit_count);
    if (peer.precision_digits != config.precision_digits ||
        peer.agree_digits != config.agree_digits ||
        peer.max_index_digits != config.max_index_digits || peer.min_security_bits > achieved) {
        channel.send(WireMessage{Kind::fail, {"config_mismatch"}});
        throw ConfigMismatch("peer HELLO does not match the session parameters");
    }
    channel.send(config.hello());
    channel.send(WireMessage{Kind::pub, {render_fixed(keys.pub.x, d), render_fixed(keys.pub.y, d)}});

    msg = channel.recv();
    if (msg.kind == Kind::fail) {
        throw_peer_fail(msg);
    }
    if (msg.kind != Kind::chal || msg.fields.size() != 1) {
        throw MalformedMessage("expected CHAL");
    }
    const Real challenge = parse_value(msg.fields[0], d);
    const Real response = dh_apply(keys.secret, challenge);
    channel.send(WireMessage{Kind::resp, {render_fixed(response, d)}});

    msg = channel.recv();
    if (msg.kind == Kind::fail) {
        throw_peer_fail(msg);
    }
    if (msg.kind != Kind::confirm || msg.fields.size() != 2) {
        throw MalformedMessage("expected CONFIRM");
    }
    if (parse_long_field(msg.fields[0]) != n) {
        throw MalformedMessage("first CONFIRM must use the negotiated digit count");
    }

    SessionKey mine = derive_session_key(response, n);
    if (msg.fields[1] != mine.hex()) {
        // Truncation boundary at digit N; offer the N-5 rendering once.
        mine = derive_session_key(response, n - 5);
    }
    channel.send(WireMessage{Kind::confirm, {std::to_string(mine.digits_used), mine.hex()}});

    msg = channel.recv();
    if (msg.kind == Kind::fail) {
        throw_peer_fail(msg);
    }
    if (msg.kind != Kind::confirm || msg.fields.size() != 2 ||
        parse_long_field(msg.fields[0]) != mine.digits_used) {
        throw MalformedMessage("expected final CONFIRM");
    }
    if (msg.fields[1] != mine.hex()) {
        throw KeyMismatch("final confirmation digest disagrees");
    }
    return mine;
}

SessionKey run_initiator(LineChannel& channel, const SessionConfig& config, Rng& rng,
                         const std::optional<PublicParams>& pinned_peer) {
    const long d = config.precision_digits;
    const long n = config.agree_digits;

    channel.send(config.hello());
    WireMessage msg = channel.recv();
    if (msg.kind == Kind::fail) {
        throw_peer_fail(msg);
    }
    const SessionConfig peer = SessionConfig::from_hello(msg);
    if (peer.precision_digits != config.precision_digits ||
        peer.agree_digits != config.agree_digits ||
        peer.max_index_digits != config.max_index_digits) {
        channel.send(WireMessage{Kind::fail, {"config_mismatch"}});
        throw ConfigMismatch("responder HELLO does not match the requested parameters");
    }

    msg = channel.recv();
    if (msg.kind == Kind::fail) {
        throw_peer_fail(msg);
    }
    if (msg.kind != Kind::pub || msg.fields.size() != 2) {
        throw MalformedMessage("expected PUB");
    }
    if (pinned_peer &&
        (msg.fields[0] != render_fixed(pinned_peer->x, d) ||
         msg.fields[1] != render_fixed(pinned_peer->y, d))) {
        channel.send(WireMessage{Kind::fail, {"auth_failed"}});
        throw AuthFailed("received public parameters do not match the pinned ones");
    }
    const Real x = parse_value(msg.fields[0], d);
    const Real y = parse_value(msg.fields[1], d);

    SecretKey r;
    r.digit_count = config.max_index_digits;
    r.s = rng.with_digits(r.digit_count);
    const Real challenge = eval_matrix(x, r.s).value;
    channel.send(WireMessage{Kind::chal, {render_fixed(challenge, d)}});

    msg = channel.recv();
    if (msg.kind == Kind::fail) {
        throw_peer_fail(msg);
    }
    if (msg.kind != Kind::resp || msg.fields.size() != 1) {
        throw MalformedMessage("expected RESP");
    }
    const Real response = parse_value(msg.fields[0], d);
    const Real expected = dh_apply(r, y);
    if (agreement_digits(response, expected) < n) {
        // Whoever answered does not own the secret behind y. Abort before
        // any CONFIRM leaves this side.
        channel.send(WireMessage{Kind::fail, {"auth_failed"}});
        throw AuthFailed("response does not match T_r(y) to the required digits");
    }

    SessionKey mine = derive_session_key(expected, n);
    channel.send(WireMessage{Kind::confirm, {std::to_string(mine.digits_used), mine.hex()}});

    msg = channel.recv();
    if (msg.kind == Kind::fail) {
        throw_peer_fail(msg);
    }
    if (msg.kind != Kind::confirm || msg.fields.size() != 2) {
        throw MalformedMessage("expected CONFIRM");
    }
    const long k = parse_long_field(msg.fields[0]);
    if (k == n - 5) {
        mine = derive_session_key(expected, n - 5);
    } else if (k != n) {
        throw MalformedMessage("unexpected CONFIRM digit count");
    }
    if (msg.fields[1] != mine.hex()) {
        channel.send(WireMessage{Kind::fail, {"key_mismatch"}});
        throw KeyMismatch("confirmation digest disagrees");
    }
    channel.send(WireMessage{Kind::confirm, {std::to_string(mine.digits_used), mine.hex()}});
    return mine;
}

}  // namespace chebcrypt::wire

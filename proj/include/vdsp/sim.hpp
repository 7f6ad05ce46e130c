// Copyright 2026 VDSP Contributors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <queue>
#include <string>
#include <thread>
#include <vector>

namespace vdsp {

/// Platform-wide clock. Every timestamp in a run (produce_ts, consume_ts,
/// broker_ts) comes from one Clock instance, emulating the shared NTP clock
/// of a deployed platform. now_ns() never decreases within a run.
class Clock {
public:
    virtual ~Clock() = default;
    virtual int64_t now_ns() const = 0;
};

using NodeId = int;
using EventFn = std::function<void()>;

/// Timed-event executor bound to a Clock. Two implementations:
/// VirtualScheduler (single-process simulation, virtual time) and
/// RealScheduler (multi-process mode, host monotonic time).
class Scheduler : public Clock {
public:
    /// Register an accounting node ("cloud", "edge:xyz", ...). Events carry
    /// the node that owns them so compute cost can be attributed per node.
    virtual NodeId register_node(const std::string& name) = 0;
    virtual const std::string& node_name(NodeId id) const = 0;

    virtual void post_at(int64_t t_ns, NodeId node, EventFn fn) = 0;
    void post_after(int64_t delay_ns, NodeId node, EventFn fn) {
        post_at(now_ns() + delay_ns, node, std::move(fn));
    }
};

// Node 0 always exists and absorbs work not owned by a platform node
// (producer payload generation, test fixtures).
constexpr NodeId kExternalNode = 0;

/// Deterministic discrete-event scheduler. Events fire in (time, post-order),
/// so identical seeds replay identical runs. While an event runs, now_ns()
/// is the event's timestamp.
///
/// CPU attribution: the thread-CPU time spent inside each event handler is
/// accumulated into per-node one-second buckets of virtual time. This is what
/// the telemetry sampler reports as per-node CPU usage in simulation mode.
class VirtualScheduler final : public Scheduler {
public:
    VirtualScheduler();

    NodeId register_node(const std::string& name) override;
    const std::string& node_name(NodeId id) const override { return node_names_[id]; }
    int64_t now_ns() const override { return now_ns_; }
    void post_at(int64_t t_ns, NodeId node, EventFn fn) override;

    /// Run every event with timestamp <= t_ns, then advance the clock to t_ns.
    void run_until(int64_t t_ns);
    /// Run until no events remain.
    void run_all();

    size_t pending_events() const { return queue_.size(); }
    size_t executed_events() const { return executed_; }

    /// Thread-CPU nanoseconds attributed to `node` during virtual second `sec`.
    int64_t cpu_ns(NodeId node, int64_t sec) const;
    int64_t node_count() const { return static_cast<int64_t>(node_names_.size()); }
    void reserve_cpu_buckets(int64_t seconds);

private:
    struct Event {
        int64_t t_ns;
        uint64_t seq;
        NodeId node;
        EventFn fn;
    };
    struct Later {
        bool operator()(const Event& a, const Event& b) const {
            return a.t_ns != b.t_ns ? a.t_ns > b.t_ns : a.seq > b.seq;
        }
    };

    void execute(Event& ev);

    int64_t now_ns_ = 0;
    uint64_t next_seq_ = 0;
    size_t executed_ = 0;
    std::priority_queue<Event, std::vector<Event>, Later> queue_;
    std::vector<std::string> node_names_;
    std::vector<std::vector<int64_t>> cpu_buckets_; // [node][virtual second] -> cpu ns
};

/// Wall-clock scheduler for multi-process mode. A worker thread executes
/// events serially at their deadlines; post_at is safe from any thread.
/// All processes on the host share CLOCK_MONOTONIC, which keeps cross-process
/// timestamps comparable.
class RealScheduler final : public Scheduler {
public:
    RealScheduler();
    ~RealScheduler() override;

    NodeId register_node(const std::string& name) override;
    const std::string& node_name(NodeId id) const override;
    int64_t now_ns() const override;
    void post_at(int64_t t_ns, NodeId node, EventFn fn) override;

    void stop();

private:
    struct Event {
        int64_t t_ns;
        uint64_t seq;
        EventFn fn;
    };
    struct Later {
        bool operator()(const Event& a, const Event& b) const {
            return a.t_ns != b.t_ns ? a.t_ns > b.t_ns : a.seq > b.seq;
        }
    };

    void loop();

    mutable std::mutex mu_;
    std::condition_variable cv_;
    std::priority_queue<Event, std::vector<Event>, Later> queue_;
    std::vector<std::string> node_names_;
    uint64_t next_seq_ = 0;
    bool stopping_ = false;
    std::thread worker_;
};

int64_t monotonic_now_ns();
int64_t thread_cpu_ns();

} // namespace vdsp

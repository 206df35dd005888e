//! Operation counters used to check preprocessing and delay bounds.
//!
//! Every core routine reports its elementary steps through [`count`]. The
//! counter is ambient (not threaded through signatures) and costs a single
//! flag test when disabled. Counting is per thread so that concurrently
//! running tests never see each other's operations; the CLI is
//! single-threaded, so for it this is the same as a process-wide counter.
//!
//! What counts as one operation: inspecting a transition pair or target,
//! inserting into or clearing one element of a state set, reading or writing
//! one table cell, one `Comp` comparison.

use std::cell::Cell;

thread_local! {
    static ENABLED: Cell<bool> = const { Cell::new(false) };
    static COUNT: Cell<u64> = const { Cell::new(0) };
}

/// Turns counting on or off for the current thread.
pub fn set_enabled(on: bool) {
    ENABLED.with(|e| e.set(on));
}

pub fn is_enabled() -> bool {
    ENABLED.with(|e| e.get())
}

/// Records `n` elementary operations.
#[inline]
pub fn count(n: u64) {
    ENABLED.with(|e| {
        if e.get() {
            COUNT.with(|c| c.set(c.get() + n));
        }
    });
}

/// Current running total.
pub fn read() -> u64 {
    COUNT.with(|c| c.get())
}

pub fn reset() {
    COUNT.with(|c| c.set(0));
}

/// Returns the running total and resets it to zero.
pub fn take() -> u64 {
    COUNT.with(|c| c.replace(0))
}

/// Enables counting for the lifetime of the guard, restoring the previous
/// setting on drop. The total is reset when the guard is created.
pub struct Counting {
    previous: bool,
}

impl Counting {
    pub fn start() -> Counting {
        let previous = is_enabled();
        set_enabled(true);
        reset();
        Counting { previous }
    }
}

impl Drop for Counting {
    fn drop(&mut self) {
        set_enabled(self.previous);
    }
}

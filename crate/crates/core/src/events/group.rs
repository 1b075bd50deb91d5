use super::Event;
use crate::error::{Error, Result};

/// Events with `window_start <= t < window_end`, sorted by time.
#[derive(Debug, Clone, PartialEq)]
pub struct EventGroup {
    events: Vec<Event>,
    window_start: f64,
    window_end: f64,
}

impl EventGroup {
    /// Validates the window and membership, then sorts by timestamp (stable).
    pub fn new(mut events: Vec<Event>, window_start: f64, window_end: f64) -> Result<Self> {
        if !window_start.is_finite() || !window_end.is_finite() {
            return Err(Error::NonFinite("group window"));
        }
        if window_end <= window_start {
            return Err(Error::InvalidArgument(format!(
                "empty window [{window_start}, {window_end})"
            )));
        }
        if let Some(e) = events.iter().find(|e| e.t < window_start || e.t >= window_end) {
            return Err(Error::InvalidArgument(format!(
                "event at t = {} outside [{window_start}, {window_end})",
                e.t
            )));
        }
        events.sort_by(|a, b| a.t.total_cmp(&b.t));
        Ok(Self {
            events,
            window_start,
            window_end,
        })
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn window_start(&self) -> f64 {
        self.window_start
    }

    pub fn window_end(&self) -> f64 {
        self.window_end
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Grouping {
    pub groups: Vec<EventGroup>,
    /// Events with `t < s_0`.
    pub dropped_before: usize,
    /// Events with `t >= s_last`.
    pub dropped_after: usize,
}

/// Bins events into `[s_{k-1}, s_k)` windows for consecutive frame
/// timestamps.
pub fn group_events(events: &[Event], frame_timestamps: &[f64]) -> Result<Grouping> {
    if frame_timestamps.len() < 2 {
        return Err(Error::InvalidArgument(
            "at least two frame timestamps are needed to form a window".into(),
        ));
    }
    if frame_timestamps.iter().any(|t| !t.is_finite()) {
        return Err(Error::NonFinite("frame timestamps"));
    }
    if let Some(w) = frame_timestamps.windows(2).find(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument(format!(
            "frame timestamps must be strictly increasing ({} then {})",
            w[0], w[1]
        )));
    }
    let mut buckets: Vec<Vec<Event>> = vec![Vec::new(); frame_timestamps.len() - 1];
    let (mut before, mut after) = (0, 0);
    for e in events {
        // number of boundaries <= t
        let k = frame_timestamps.partition_point(|&s| s <= e.t);
        if k == 0 {
            before += 1;
        } else if k == frame_timestamps.len() {
            after += 1;
        } else {
            buckets[k - 1].push(*e);
        }
    }
    let groups = buckets
        .into_iter()
        .zip(frame_timestamps.windows(2))
        .map(|(evs, w)| EventGroup::new(evs, w[0], w[1]))
        .collect::<Result<Vec<_>>>()?;
    Ok(Grouping {
        groups,
        dropped_before: before,
        dropped_after: after,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::events::Polarity;

    fn ev(t: f64) -> Event {
        Event::new(0, 0, t, Polarity::Positive).unwrap()
    }

    fn times(g: &EventGroup) -> Vec<f64> {
        g.events().iter().map(|e| e.t).collect()
    }

    #[test]
    fn boundary_goes_right() {
        let g = group_events(&[ev(0.1), ev(0.2), ev(0.3)], &[0.0, 0.2, 0.4]).unwrap();
        assert_eq!(times(&g.groups[0]), vec![0.1]);
        assert_eq!(times(&g.groups[1]), vec![0.2, 0.3]);
    }

    #[test]
    fn empty_events_give_empty_groups() {
        let g = group_events(&[], &[0.0, 1.0, 2.0, 3.0]).unwrap();
        assert_eq!(g.groups.len(), 3);
        assert!(g.groups.iter().all(EventGroup::is_empty));
    }

    #[test]
    fn out_of_range_counted() {
        let g = group_events(&[ev(-1.0), ev(0.5), ev(1.0), ev(7.0)], &[0.0, 1.0]).unwrap();
        assert_eq!((g.dropped_before, g.dropped_after), (1, 2));
        assert_eq!(g.groups[0].len(), 1);
    }

    #[test]
    fn groups_are_sorted() {
        let g = group_events(&[ev(0.3), ev(0.1), ev(0.2)], &[0.0, 1.0]).unwrap();
        assert_eq!(times(&g.groups[0]), vec![0.1, 0.2, 0.3]);
    }

    #[test]
    fn unsorted_boundaries_rejected() {
        assert!(group_events(&[], &[0.0, 0.0]).is_err());
        assert!(group_events(&[], &[1.0, 0.5]).is_err());
        assert!(group_events(&[], &[1.0]).is_err());
    }
}

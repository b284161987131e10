//! Small planar geometry helpers shared across the crate.

use nalgebra::{Matrix2, Vector2};
use serde::{Deserialize, Serialize};

pub type Vec2 = Vector2<f64>;
pub type Mat2 = Matrix2<f64>;

/// Axis-aligned rectangle in the value plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub min: [f64; 2],
    pub max: [f64; 2],
}

impl Rect {
    pub fn new(min: [f64; 2], max: [f64; 2]) -> Self {
        Rect { min, max }
    }

    pub fn contains(&self, p: &Vec2) -> bool {
        p.x >= self.min[0] && p.x <= self.max[0] && p.y >= self.min[1] && p.y <= self.max[1]
    }

    pub fn center(&self) -> Vec2 {
        Vec2::new(
            0.5 * (self.min[0] + self.max[0]),
            0.5 * (self.min[1] + self.max[1]),
        )
    }

    pub fn width(&self) -> f64 {
        self.max[0] - self.min[0]
    }

    pub fn height(&self) -> f64 {
        self.max[1] - self.min[1]
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn intersection(&self, other: &Rect) -> Option<Rect> {
        let min = [
            self.min[0].max(other.min[0]),
            self.min[1].max(other.min[1]),
        ];
        let max = [
            self.max[0].min(other.max[0]),
            self.max[1].min(other.max[1]),
        ];
        if min[0] < max[0] && min[1] < max[1] {
            Some(Rect { min, max })
        } else {
            None
        }
    }
}

/// Disk in the value plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub center: [f64; 2],
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Vec2, radius: f64) -> Self {
        Disk {
            center: [center.x, center.y],
            radius,
        }
    }

    pub fn center_vec(&self) -> Vec2 {
        Vec2::new(self.center[0], self.center[1])
    }

    pub fn contains(&self, p: &Vec2) -> bool {
        (p - self.center_vec()).norm() <= self.radius
    }

    pub fn overlaps(&self, other: &Disk) -> bool {
        (self.center_vec() - other.center_vec()).norm() < self.radius + other.radius
    }

    /// Does the disk meet the closed horizontal ray {y = 0, sign * x >= 0}?
    pub fn crosses_horizontal_ray(&self, sign: f64) -> bool {
        if self.center[1].abs() > self.radius {
            return false;
        }
        let half_chord = (self.radius * self.radius - self.center[1] * self.center[1]).sqrt();
        let x_lo = self.center[0] - half_chord;
        let x_hi = self.center[0] + half_chord;
        if sign >= 0.0 {
            x_hi >= 0.0
        } else {
            x_lo <= 0.0
        }
    }
}

/// Open region of the value plane used by coverings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    Rect(Rect),
    Disk(Disk),
}

impl Domain {
    pub fn contains(&self, p: &Vec2) -> bool {
        match self {
            Domain::Rect(r) => r.contains(p),
            Domain::Disk(d) => d.contains(p),
        }
    }

    pub fn bounding_rect(&self) -> Rect {
        match self {
            Domain::Rect(r) => *r,
            Domain::Disk(d) => Rect::new(
                [d.center[0] - d.radius, d.center[1] - d.radius],
                [d.center[0] + d.radius, d.center[1] + d.radius],
            ),
        }
    }

    pub fn overlaps(&self, other: &Domain) -> bool {
        // Conservative for disk pairs, exact via bounding boxes otherwise.
        match (self, other) {
            (Domain::Disk(a), Domain::Disk(b)) => a.overlaps(b),
            _ => self
                .bounding_rect()
                .intersection(&other.bounding_rect())
                .is_some(),
        }
    }
}

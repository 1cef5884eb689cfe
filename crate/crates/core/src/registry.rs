//! Name-keyed collections of interchangeable strategies.

/// Anything that can be registered and looked up by name.
pub trait Named {
    fn name(&self) -> &'static str;
}

/// Boxed strategies in registration order; names are unique.
pub struct Registry<T: ?Sized + Named> {
    entries: Vec<Box<T>>,
}

impl<T: ?Sized + Named> Registry<T> {
    pub fn empty() -> Self {
        Registry {
            entries: Vec::new(),
        }
    }

    /// Adds a strategy, replacing any existing one with the same name.
    pub fn register(&mut self, item: Box<T>) {
        self.entries.retain(|d| d.name() != item.name());
        self.entries.push(item);
    }

    pub fn get(&self, name: &str) -> Option<&T> {
        self.entries
            .iter()
            .find(|d| d.name() == name)
            .map(|d| d.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|d| d.name()).collect()
    }
}

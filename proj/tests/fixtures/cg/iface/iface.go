package iface

type Store interface {
	Get(key string) string
}

type memStore struct{}

func (memStore) Get(key string) string { return key }

type diskStore struct{}

func (d *diskStore) Get(key string) string { return "" }

type notAStore struct{}

func (notAStore) Put(key string) {}

func Use(s Store) string {
	return s.Get("k")
}

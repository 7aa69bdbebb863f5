package telemetry

import (
	"sync"
	"time"
)

// Gauge holds process-local metrics. It is never read by consensus code.
type Gauge struct {
	mu     sync.Mutex
	values map[string]float64
}

func NewGauge() *Gauge {
	return &Gauge{values: make(map[string]float64)}
}

func (g *Gauge) Set(key string, v float64) {
	g.mu.Lock()
	defer g.mu.Unlock()
	g.values[key] = v
}

func (g *Gauge) Keys() []string {
	var out []string
	for k := range g.values { // decoy: cosmos/map-iteration
		out = append(out, k)
	}
	return out
}

func (g *Gauge) Average() float64 {
	var sum float64 // decoy: cosmos/float-arith
	for _, v := range g.values {
		sum += v
	}
	return sum / float64(len(g.values))
}

// StartReporter samples the uptime gauge in the background.
func StartReporter(g *Gauge, every time.Duration) {
	go func() {
		for {
			time.Sleep(every)
			g.Set("uptime", float64(time.Now().Unix()))
		}
	}()
}

// MeasureSince records the seconds elapsed since start.
func MeasureSince(g *Gauge, key string, start time.Time) {
	g.Set(key, time.Since(start).Seconds())
}
